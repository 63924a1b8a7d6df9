#include "sgtree/oracle.hpp"

namespace sgtree {
namespace {

// Everything here works on a plain membership vector over [0, limit] with
// the convention that values above the limit are members.

bool complement_is_closed(const std::vector<bool>& member) {
  const std::int64_t n = std::int64_t(member.size());
  for (std::int64_t x = 1; x < n; ++x) {
    if (!member[std::size_t(x)]) continue;
    for (std::int64_t y = x; y < n; ++y) {
      if (!member[std::size_t(y)]) continue;
      if (x + y < n && !member[std::size_t(x + y)]) return false;
    }
  }
  return true;
}

std::int64_t brute_type(const std::vector<bool>& member) {
  const std::int64_t n = std::int64_t(member.size());
  std::int64_t type = 0;
  for (std::int64_t x = 1; x < n; ++x) {
    if (member[std::size_t(x)]) continue;
    bool pseudo = true;
    for (std::int64_t s = 1; pseudo && s < n; ++s) {
      if (!member[std::size_t(s)]) continue;
      if (x + s < n && !member[std::size_t(x + s)]) pseudo = false;
    }
    if (pseudo) ++type;
  }
  return type;
}

bool brute_is_leaf(const std::vector<bool>& member, std::int64_t frobenius) {
  // a minimal generator above F exists iff some x in (F, F+m] has no
  // decomposition into two positive members
  std::int64_t m = 0;
  for (std::int64_t x = 1; x < std::int64_t(member.size()); ++x) {
    if (member[std::size_t(x)]) {
      m = x;
      break;
    }
  }
  if (m == 0) m = frobenius + 1;
  auto in = [&](std::int64_t v) {
    return v > frobenius || (v >= 1 && member[std::size_t(v)]);
  };
  for (std::int64_t x = frobenius + 1; x <= frobenius + m; ++x) {
    bool decomposable = false;
    for (std::int64_t a = 1; !decomposable && a <= x - 1; ++a)
      if (in(a) && in(x - a)) decomposable = true;
    if (!decomposable) return false;  // effective generator found
  }
  return true;
}

}  // namespace

OracleResult enumerate_brute(std::int64_t genus) {
  if (genus < 1 || genus > 10) throw GenusTooLargeForOracle(genus);

  OracleResult result;
  result.genus = genus;

  const std::int64_t universe = 2 * genus - 1;  // every gap is <= 2g-1
  // iterate g-subsets of {1..2g-1} as sorted index arrays, lexicographically
  std::vector<std::int64_t> pick(std::size_t(genus), 0);
  for (std::int64_t i = 0; i < genus; ++i) pick[std::size_t(i)] = i + 1;
  while (true) {
    std::vector<bool> member(std::size_t(universe + 1), true);
    for (std::int64_t x : pick) member[std::size_t(x)] = false;
    if (complement_is_closed(member)) {
      result.semigroup_gap_sets.push_back(pick);
      const std::int64_t t = brute_type(member);
      result.by_type[t] += 1;
      if (brute_is_leaf(member, pick.back())) result.leaf_by_type[t] += 1;
    }
    std::int64_t i = genus - 1;
    while (i >= 0 && pick[std::size_t(i)] == universe - (genus - 1 - i)) --i;
    if (i < 0) break;
    ++pick[std::size_t(i)];
    for (std::int64_t j = i + 1; j < genus; ++j)
      pick[std::size_t(j)] = pick[std::size_t(j - 1)] + 1;
  }
  return result;
}

}  // namespace sgtree
