#include "sgtree/analysis.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace sgtree {
namespace {

// Observed maxima of {t : l(g,t) > 0} for genus 7..30, used as the
// regression reference alongside the 2q-1 / 2q / 2q+1 bound.
constexpr std::array<std::int64_t, 24> kReferenceLeafTypeMax = {
    3, 3, 3, 4, 5, 5, 5, 6, 7, 7, 7, 8, 9, 9, 9, 10, 11, 11, 11, 12, 13, 13, 13, 14};

Verdict close_verdict(bool any_checked, const std::vector<Witness>& witnesses) {
  if (!witnesses.empty()) return Verdict::violated;
  return any_checked ? Verdict::holds : Verdict::vacuous;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::vacuous:
      return "vacuous";
  }
  return "unknown";
}

UnimodalityResult is_unimodal(std::span<const std::uint64_t> seq) {
  if (seq.empty()) throw std::invalid_argument("unimodality needs a nonempty sequence");
  for (std::size_t j = 0; j < seq.size(); ++j) {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 <= j; ++i) ok = seq[i] <= seq[i + 1];
    for (std::size_t i = j; ok && i + 1 < seq.size(); ++i) ok = seq[i] >= seq[i + 1];
    if (ok) return {true, j};
  }
  return {false, 0};
}

ConjectureReport check_row_unimodality(const CountTable& table, const std::string& name) {
  ConjectureReport report;
  report.name = name;
  report.scope = {1, table.genus_max(), 1, table.genus_max()};
  report.detail_label = "peak type per genus";
  for (std::int64_t g = 1; g <= table.genus_max(); ++g) {
    const auto& row = table.row(g);
    const UnimodalityResult r = is_unimodal(row);
    if (r.unimodal) {
      report.detail.emplace_back(g, std::int64_t(r.peak) + 1);
      continue;
    }
    // witness: the first re-ascent after a strict descent
    std::size_t d = 0;
    while (d + 1 < row.size() && row[d] <= row[d + 1]) ++d;
    std::size_t k = d;
    while (k + 1 < row.size() && row[k] >= row[k + 1]) ++k;
    report.witnesses.push_back({g, std::int64_t(k) + 2, row[k], row[k + 1]});
  }
  report.verdict = close_verdict(table.genus_max() >= 1, report.witnesses);
  return report;
}

ConjectureReport check_column_monotonicity(const CountTable& table, std::int64_t t_min,
                                           std::int64_t t_max) {
  ConjectureReport report;
  t_min = std::max<std::int64_t>(t_min, 1);
  t_max = std::min(t_max, table.genus_max());
  report.name = "column-monotonicity";
  report.scope = {1, table.genus_max(), t_min, t_max};
  bool any = false;
  for (std::int64_t t = t_min; t <= t_max; ++t) {
    // the first two entries of every column are the trivial 1, 1 plateau;
    // growth is claimed from g = t+1 on
    for (std::int64_t g = t + 1; g + 1 <= table.genus_max(); ++g) {
      any = true;
      const std::uint64_t a = table.at(g, t), b = table.at(g + 1, t);
      if (!(a < b)) report.witnesses.push_back({g, t, a, b});
    }
  }
  report.verdict = close_verdict(any, report.witnesses);
  return report;
}

ConjectureReport stabilizer_report(const CountTable& table,
                                   const std::map<std::int64_t, std::uint64_t>& vset_sizes) {
  ConjectureReport report;
  report.name = "stabilizer-diagonal";
  report.detail_label = "observed onset genus per ell";
  const std::int64_t gmax = table.genus_max();
  std::int64_t ell_max = 0;
  bool any = false;
  for (const auto& [ell, size] : vset_sizes) {
    if (ell < 0) throw std::invalid_argument("ell must be non-negative");
    if (3 * ell - 1 > gmax)
      throw std::invalid_argument("table too small to verify ell = " + std::to_string(ell));
    ell_max = std::max(ell_max, ell);
    for (std::int64_t g = std::max<std::int64_t>(3 * ell - 1, ell + 1); g <= gmax; ++g) {
      any = true;
      const std::uint64_t n = table.at(g, g - ell);
      if (n != size) report.witnesses.push_back({g, g - ell, n, size});
    }
    // observed onset: least genus from which the diagonal stays constant
    const std::uint64_t tail = table.at(gmax, gmax - ell);
    std::int64_t onset = gmax;
    while (onset - 1 >= ell + 1 && table.at(onset - 1, onset - 1 - ell) == tail) --onset;
    report.detail.emplace_back(ell, onset);
  }
  report.scope = {1, gmax, std::max<std::int64_t>(1, gmax - ell_max), gmax};
  report.verdict = close_verdict(any, report.witnesses);
  return report;
}

std::int64_t leaf_type_bound(std::int64_t genus) {
  const std::int64_t q = genus / 4, r = genus % 4;
  if (r == 2) return 2 * q;
  if (r == 3) return 2 * q + 1;
  return 2 * q - 1;
}

ConjectureReport leaf_type_bound_report(const CountTable& leaf_table) {
  ConjectureReport report;
  report.name = "leaf-type-bound";
  report.scope = {1, leaf_table.genus_max(), 1, leaf_table.genus_max()};
  report.detail_label = "max leaf type per genus";
  bool any = false;
  for (std::int64_t g = 1; g <= leaf_table.genus_max(); ++g) {
    const auto& row = leaf_table.row(g);
    std::int64_t max_t = 0;
    for (std::int64_t t = g; t >= 1; --t) {
      if (row[std::size_t(t - 1)] > 0) {
        max_t = t;
        break;
      }
    }
    if (max_t == 0) continue;  // no leaves of this genus
    any = true;
    report.detail.emplace_back(g, max_t);
    const std::int64_t bound = leaf_type_bound(g);
    if (max_t > bound)
      report.witnesses.push_back({g, max_t, std::uint64_t(max_t), std::uint64_t(bound)});
    if (g >= 7 && g <= 30) {
      const std::int64_t expected = kReferenceLeafTypeMax[std::size_t(g - 7)];
      if (max_t != expected)
        report.witnesses.push_back({g, max_t, std::uint64_t(max_t), std::uint64_t(expected)});
    }
  }
  report.verdict = close_verdict(any, report.witnesses);
  return report;
}

std::string format_ratio(std::uint64_t ratio_scaled) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%04llu",
                static_cast<unsigned long long>(ratio_scaled / 10000),
                static_cast<unsigned long long>(ratio_scaled % 10000));
  return buf;
}

std::vector<RatioRow> ratio_series(const CountTable& table, const CountTable& leaf_table) {
  if (table.genus_max() != leaf_table.genus_max())
    throw std::invalid_argument("ratio series needs tables with equal genus bounds");
  std::vector<RatioRow> rows;
  rows.reserve(std::size_t(table.genus_max()));
  for (std::int64_t g = 1; g <= table.genus_max(); ++g) {
    RatioRow r;
    r.genus = g;
    r.leaves = leaf_table.row_sum(g);
    r.total = table.row_sum(g);
    r.ratio_scaled =
        r.total == 0 ? 0 : (r.leaves * 20000 + r.total) / (2 * r.total);  // half-up
    rows.push_back(r);
  }
  return rows;
}

BrasAmorosReports bras_amoros_check(std::span<const std::uint64_t> n_series) {
  BrasAmorosReports out;
  const std::int64_t n = std::int64_t(n_series.size());
  auto at = [&](std::int64_t g) { return n_series[std::size_t(g - 1)]; };

  out.strong.name = "growth-strong";
  out.strong.scope = {1, n, 0, 0};
  bool any = false;
  for (std::int64_t g = 3; g <= n; ++g) {
    any = true;
    const std::uint64_t lhs = at(g - 2) + at(g - 1);
    if (!(lhs <= at(g))) out.strong.witnesses.push_back({g, 0, lhs, at(g)});
  }
  out.strong.verdict = close_verdict(any, out.strong.witnesses);

  out.weak.name = "growth-weak";
  out.weak.scope = {1, n, 0, 0};
  any = false;
  for (std::int64_t g = 1; g + 1 <= n; ++g) {
    any = true;
    if (!(at(g) < at(g + 1))) out.weak.witnesses.push_back({g, 0, at(g), at(g + 1)});
  }
  out.weak.verdict = close_verdict(any, out.weak.witnesses);
  return out;
}

}  // namespace sgtree
