#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sgtree/count_table.hpp"

namespace sgtree {

enum class Verdict { holds, violated, vacuous };

std::string to_string(Verdict v);

/// A counterexample to the inequality a check asserts at cell (g, t):
/// lhs and rhs are the two compared quantities.
struct Witness {
  std::int64_t g = 0;
  std::int64_t t = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Scope {
  std::int64_t g_min = 0, g_max = 0, t_min = 0, t_max = 0;
};

/// Pure result data of one conjecture/theorem check. verdict == violated
/// exactly when witnesses is nonempty. `detail` carries per-check extras
/// (row peaks, stabilizer onsets) for rendering; it never affects the
/// verdict.
struct ConjectureReport {
  std::string name;
  Scope scope;
  Verdict verdict = Verdict::vacuous;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::int64_t, std::int64_t>> detail;
  std::string detail_label;
};

struct UnimodalityResult {
  bool unimodal = false;
  std::size_t peak = 0;  // least valid peak index when unimodal
};

/// Non-strict rise to a peak followed by a non-strict fall; returns the
/// least peak index.
UnimodalityResult is_unimodal(std::span<const std::uint64_t> seq);

/// Applies is_unimodal to every genus row of the table. detail lists
/// (g, 1-based peak type) for each row.
ConjectureReport check_row_unimodality(const CountTable& table, const std::string& name);

/// Strict growth n(g,t) < n(g+1,t) along each column t in [t_min, t_max].
/// Comparison starts at g = t+1: the two leading entries of every column
/// are structurally equal to 1, so the conjecture is read from there on.
ConjectureReport check_column_monotonicity(const CountTable& table, std::int64_t t_min,
                                           std::int64_t t_max);

/// Verifies n(g, g-ell) == vset_sizes[ell] for all 3*ell-1 <= g <= genus_max
/// and reports the observed onset genus per ell in detail.
ConjectureReport stabilizer_report(const CountTable& table,
                                   const std::map<std::int64_t, std::uint64_t>& vset_sizes);

/// The conjectured leaf-type bound for genus g = 4q+r: 2q-1 for r in {0,1},
/// 2q for r = 2, 2q+1 for r = 3.
std::int64_t leaf_type_bound(std::int64_t genus);

/// Checks max{t : l(g,t) > 0} against leaf_type_bound(g) for every genus,
/// and against the recorded reference maxima for 7 <= g <= 30. detail lists
/// the observed maxima.
ConjectureReport leaf_type_bound_report(const CountTable& leaf_table);

struct RatioRow {
  std::int64_t genus = 0;
  std::uint64_t leaves = 0;
  std::uint64_t total = 0;
  std::uint64_t ratio_scaled = 0;  // leaves/total rounded half-up to 4 decimals, x10^4
};

/// Formats ratio_scaled as a dot-decimal with 4 digits, e.g. "0.3478".
std::string format_ratio(std::uint64_t ratio_scaled);

/// Row sums of both tables with the leaf ratio per genus.
std::vector<RatioRow> ratio_series(const CountTable& table, const CountTable& leaf_table);

struct BrasAmorosReports {
  ConjectureReport strong;  // n(g-2) + n(g-1) <= n(g)
  ConjectureReport weak;    // n(g) < n(g+1)
};

/// Both growth inequalities over a series starting at g = 1.
BrasAmorosReports bras_amoros_check(std::span<const std::uint64_t> n_series);

}  // namespace sgtree
