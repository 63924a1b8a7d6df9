#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgtree {

class GenusTooLargeForOracle : public std::invalid_argument {
 public:
  explicit GenusTooLargeForOracle(std::int64_t genus)
      : std::invalid_argument("brute-force enumeration is limited to genus <= 10, got " +
                              std::to_string(genus)) {}
};

struct OracleResult {
  std::int64_t genus = 0;
  std::vector<std::vector<std::int64_t>> semigroup_gap_sets;
  std::map<std::int64_t, std::uint64_t> by_type;
  std::map<std::int64_t, std::uint64_t> leaf_by_type;
};

/// Ground-truth enumeration of all numerical semigroups of the given genus:
/// every g-subset of {1..2g-1} is tested for additive closure of its
/// complement with plain loops, independent of the tree walker and of the
/// bit-table semigroup arithmetic. Limited to genus <= 10.
OracleResult enumerate_brute(std::int64_t genus);

}  // namespace sgtree
