#include "sgtree/analysis.hpp"

#include <vector>

#include "doctest.h"
#include "sgtree/gap_vector.hpp"
#include "sgtree/tree.hpp"

using namespace sgtree;

TEST_CASE("unimodality of sequences") {
  auto r = is_unimodal(std::vector<std::uint64_t>{8, 9, 12, 5, 3, 1, 1});
  CHECK(r.unimodal);
  CHECK(r.peak == 2);

  CHECK_FALSE(is_unimodal(std::vector<std::uint64_t>{1, 2, 1, 2}).unimodal);

  r = is_unimodal(std::vector<std::uint64_t>{5, 3, 0, 0, 0, 0});
  CHECK(r.unimodal);
  CHECK(r.peak == 0);

  r = is_unimodal(std::vector<std::uint64_t>{1});
  CHECK(r.unimodal);
  CHECK(r.peak == 0);

  // least peak on a plateau
  r = is_unimodal(std::vector<std::uint64_t>{1, 3, 3, 2});
  CHECK(r.unimodal);
  CHECK(r.peak == 1);

  CHECK_THROWS_AS(is_unimodal(std::vector<std::uint64_t>{}), std::invalid_argument);
}

TEST_CASE("row unimodality reports") {
  const CountTable n12 = count_table(12);
  const auto rep = check_row_unimodality(n12, "row-unimodality-counts");
  CHECK(rep.verdict == Verdict::holds);
  CHECK(rep.witnesses.empty());
  // peak of the genus 7 row sits at type 3
  bool found = false;
  for (const auto& [g, t] : rep.detail)
    if (g == 7) {
      CHECK(t == 3);
      found = true;
    }
  CHECK(found);

  const auto leaves = check_row_unimodality(leaf_table(12), "row-unimodality-leaves");
  CHECK(leaves.verdict == Verdict::holds);

  // a constructed violation is witnessed faithfully
  CountTable bad(4);
  bad.add(4, 1, 1);
  bad.add(4, 2, 2);
  bad.add(4, 3, 1);
  bad.add(4, 4, 2);
  const auto vrep = check_row_unimodality(bad, "bad");
  CHECK(vrep.verdict == Verdict::violated);
  REQUIRE(vrep.witnesses.size() == 1);
  CHECK(vrep.witnesses[0].g == 4);
  CHECK(vrep.witnesses[0].t == 4);
  CHECK(vrep.witnesses[0].lhs == 1);
  CHECK(vrep.witnesses[0].rhs == 2);
  CHECK(vrep.witnesses[0].lhs < vrep.witnesses[0].rhs);
}

TEST_CASE("column monotonicity") {
  const CountTable n12 = count_table(12);
  const auto above = check_column_monotonicity(n12, 2, 12);
  CHECK(above.verdict == Verdict::holds);

  // the type 1 column already dips inside g <= 12
  const auto t1 = check_column_monotonicity(n12, 1, 1);
  CHECK(t1.verdict == Verdict::violated);
  std::vector<Witness> expected = {
      {4, 1, 3, 3},    // plateau
      {7, 1, 8, 7},    // strict descents
      {10, 1, 20, 18},
  };
  CHECK(t1.witnesses == expected);
  // witnesses re-evaluate against the raw table
  for (const Witness& w : t1.witnesses) {
    CHECK(w.lhs == n12.at(w.g, w.t));
    CHECK(w.rhs == n12.at(w.g + 1, w.t));
    CHECK_FALSE(w.lhs < w.rhs);
  }

  CountTable tiny(2);
  CHECK(check_column_monotonicity(tiny, 2, 2).verdict == Verdict::vacuous);
}

TEST_CASE("stabilizer diagonals") {
  const CountTable n14 = count_table(14);
  std::map<std::int64_t, std::uint64_t> sizes;
  for (std::int64_t ell = 1; ell <= 5; ++ell)
    sizes[ell] = stable_vectors(ell).size();
  const auto rep = stabilizer_report(n14, sizes);
  CHECK(rep.verdict == Verdict::holds);
  // observed onsets coincide with 3*ell - 1
  std::vector<std::pair<std::int64_t, std::int64_t>> onsets = {
      {1, 2}, {2, 5}, {3, 8}, {4, 11}, {5, 14}};
  CHECK(rep.detail == onsets);

  CHECK_THROWS_AS(stabilizer_report(count_table(4), sizes), std::invalid_argument);
}

TEST_CASE("stabilizer onset and leaf maximum at genus 23") {
  const CountTable n23 = count_table(23);
  std::map<std::int64_t, std::uint64_t> sizes{{8, stable_vectors(8).size()}};
  CHECK(sizes[8] == 367);
  const auto rep = stabilizer_report(n23, sizes);
  CHECK(rep.verdict == Verdict::holds);
  REQUIRE(rep.detail.size() == 1);
  CHECK(rep.detail[0] == std::pair<std::int64_t, std::int64_t>{8, 23});

  const auto leaves = leaf_type_bound_report(leaf_table(23));
  CHECK(leaves.verdict == Verdict::holds);
  CHECK(leaves.detail.back() == std::pair<std::int64_t, std::int64_t>{23, 11});
}

TEST_CASE("leaf type bound") {
  CHECK(leaf_type_bound(14) == 6);
  CHECK(leaf_type_bound(23) == 11);
  CHECK(leaf_type_bound(4) == 1);
  CHECK(leaf_type_bound(19) == 9);

  const auto rep = leaf_type_bound_report(leaf_table(12));
  CHECK(rep.verdict == Verdict::holds);
  std::vector<std::pair<std::int64_t, std::int64_t>> maxima = {
      {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, 3}, {8, 3}, {9, 3}, {10, 4}, {11, 5}, {12, 5}};
  CHECK(rep.detail == maxima);
}

TEST_CASE("ratio series") {
  const CountTable n6 = count_table(6);
  const CountTable l6 = leaf_table(6);
  const auto rows = ratio_series(n6, l6);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].genus == 1);
  CHECK(rows[0].leaves == 0);
  CHECK(rows[0].total == 1);
  CHECK(rows[0].ratio_scaled == 0);
  CHECK(format_ratio(rows[0].ratio_scaled) == "0.0000");
  CHECK(rows[5].leaves == 8);
  CHECK(rows[5].total == 23);
  CHECK(format_ratio(rows[5].ratio_scaled) == "0.3478");
  CHECK(format_ratio(ratio_series(count_table(5), leaf_table(5))[4].ratio_scaled) ==
        "0.1667");  // 2/12 rounds up
}

TEST_CASE("ratio tail grows monotonically") {
  // the series dips at 12 -> 13 and 16 -> 17; from genus 17 on it is
  // non-decreasing throughout the tabulated range
  const auto rows = ratio_series(count_table(22), leaf_table(22));
  for (std::size_t g = 17; g < 22; ++g)
    CHECK(rows[g - 1].ratio_scaled <= rows[g].ratio_scaled);
  CHECK(rows[11].ratio_scaled > rows[12].ratio_scaled);  // the genus 12 dip
}

TEST_CASE("growth inequalities") {
  const auto sums = count_table(12).row_sums();
  const auto reps = bras_amoros_check(sums);
  CHECK(reps.strong.verdict == Verdict::holds);
  CHECK(reps.weak.verdict == Verdict::holds);

  const std::vector<std::uint64_t> flat = {1, 1, 1};
  const auto bad = bras_amoros_check(flat);
  CHECK(bad.strong.verdict == Verdict::violated);
  REQUIRE(bad.strong.witnesses.size() == 1);
  CHECK(bad.strong.witnesses[0].g == 3);
  CHECK(bad.strong.witnesses[0].lhs == 2);
  CHECK(bad.strong.witnesses[0].rhs == 1);
  CHECK(bad.weak.verdict == Verdict::violated);
}
