#include "sgtree/gap_vector.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sgtree {
namespace {

constexpr std::int64_t kEllLimit = 16;

// Builds the vector of length 2*ell whose 1-positions (1-based) are given.
GapVector from_one_positions(std::int64_t ell, const std::vector<std::int64_t>& ones) {
  std::vector<std::uint8_t> bits(std::size_t(2 * ell), 0);
  for (std::int64_t p : ones) bits[std::size_t(p - 1)] = 1;
  return GapVector(std::move(bits));
}

void check_ell(std::int64_t ell) {
  if (ell < 0 || ell > kEllLimit) throw UnsupportedEll(ell);
}

}  // namespace

GapVector::GapVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.size() > 64) throw UnsupportedEll(std::int64_t(bits_.size() / 2));
  std::size_t ones = 0;
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("gap vector entries must be 0 or 1");
    ones += b;
  }
  if (ones * 2 != bits_.size()) throw UnbalancedGapVector();
}

GapVector GapVector::parse(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("gap vector strings use only 0/1");
    bits.push_back(std::uint8_t(c - '0'));
  }
  return GapVector(std::move(bits));
}

std::string GapVector::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (std::uint8_t b : bits_) s.push_back(char('0' + b));
  return s;
}

std::int64_t GapVector::cotype() const {
  const std::size_t n = bits_.size();
  std::uint64_t diffs = 0;  // bit d-1 marks the presence of difference d
  for (std::size_t i = 0; i < n; ++i) {
    if (bits_[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j)
      if (bits_[j]) diffs |= std::uint64_t{1} << (j - i - 1);
  }
  return std::popcount(diffs);
}

GapVector gap_vector_of(const NumericalSemigroup& s) {
  if (s.genus() < 1) throw std::invalid_argument("the gap vector needs genus >= 1");
  const std::int64_t g = s.genus(), ell = g - s.type();
  std::vector<std::uint8_t> bits(std::size_t(2 * ell), 0);
  for (std::int64_t i = 1; i <= 2 * ell; ++i)
    bits[std::size_t(i - 1)] = s.is_gap(g - ell + i) ? 1 : 0;
  return GapVector(std::move(bits));
}

std::vector<std::int64_t> gap_set_of(std::int64_t genus, const GapVector& v) {
  if (genus <= v.ell()) throw GenusTooSmall(genus, v.ell());
  std::vector<std::int64_t> gaps;
  gaps.reserve(std::size_t(genus));
  for (std::int64_t x = 1; x <= genus - v.ell(); ++x) gaps.push_back(x);
  for (std::int64_t i = 1; i <= 2 * v.ell(); ++i)
    if (v.at(i)) gaps.push_back(genus - v.ell() + i);
  return gaps;
}

NumericalSemigroup semigroup_from_vector(std::int64_t genus, const GapVector& v) {
  return NumericalSemigroup::from_gap_set(gap_set_of(genus, v));
}

std::vector<std::int64_t> predicted_gaps_minus_pf(std::int64_t genus, const GapVector& v) {
  if (genus < 3 * v.ell() - 1)
    throw GenusTooSmall(genus, v.ell());
  const std::int64_t n = 2 * v.ell();
  std::set<std::int64_t> diffs;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (v.at(i)) continue;
    for (std::int64_t j = i + 1; j <= n; ++j)
      if (v.at(j)) diffs.insert(j - i);
  }
  return {diffs.begin(), diffs.end()};
}

std::vector<GapVector> stable_vectors(std::int64_t ell) {
  check_ell(ell);
  if (ell == 0) return {GapVector()};

  std::vector<GapVector> out;
  // 1-position sets in lexicographic order: start {1..ell}, classic successor
  std::vector<std::int64_t> pos(std::size_t(ell), 0);
  for (std::int64_t i = 0; i < ell; ++i) pos[std::size_t(i)] = i + 1;
  const std::int64_t n = 2 * ell;
  while (true) {
    GapVector v = from_one_positions(ell, pos);
    if (v.cotype() == ell) out.push_back(std::move(v));
    // advance
    std::int64_t i = ell - 1;
    while (i >= 0 && pos[std::size_t(i)] == n - (ell - 1 - i)) --i;
    if (i < 0) break;
    ++pos[std::size_t(i)];
    for (std::int64_t j = i + 1; j < ell; ++j)
      pos[std::size_t(j)] = pos[std::size_t(j - 1)] + 1;
  }
  return out;
}

std::vector<GapVector> catalog_small_ell(std::int64_t ell) {
  switch (ell) {
    case 0:
      return {GapVector()};
    case 1:
      return {GapVector::parse("01")};
    case 2:
      return {GapVector::parse("1001"), GapVector::parse("0110"), GapVector::parse("0101")};
    case 3:
      return {GapVector::parse("110001"), GapVector::parse("101001"),
              GapVector::parse("100110"), GapVector::parse("011100"),
              GapVector::parse("011010"), GapVector::parse("011001"),
              GapVector::parse("010101")};
    default:
      throw UnsupportedEll(ell);
  }
}

std::vector<GapVector> family_vectors(std::int64_t ell) {
  check_ell(ell);
  if (ell < 1) throw UnsupportedEll(ell);

  std::set<GapVector> seen;
  auto emit = [&](const std::vector<std::int64_t>& ones) {
    GapVector v = from_one_positions(ell, ones);
    if (v.cotype() != ell)
      throw std::logic_error("family vector " + v.str() + " fails the cotype test");
    seen.insert(std::move(v));
  };
  auto prefix_ones = [&](std::int64_t from, std::int64_t to) {
    std::vector<std::int64_t> ones;
    for (std::int64_t k = from; k <= to; ++k) ones.push_back(k);
    return ones;
  };

  // (i) one zero in the first half at position i, one 1 in the second half
  // at position ell+m: stable for i = 1 (any m) and for 2 <= i <= ell, m = ell.
  for (std::int64_t m = 1; m <= ell; ++m) {
    std::vector<std::int64_t> ones = prefix_ones(2, ell);
    ones.push_back(ell + m);
    emit(ones);
  }
  for (std::int64_t i = 2; i <= ell; ++i) {
    std::vector<std::int64_t> ones = prefix_ones(1, ell);
    ones.erase(std::find(ones.begin(), ones.end(), i));
    ones.push_back(2 * ell);
    emit(ones);
  }

  // (ii) ones at 1..ell-2 and at ell+m, ell+n with 0 <= m < n <= ell:
  // stable for n = ell-1 with ceil(ell/2)-1 <= m, and n = ell with
  // m <= floor(ell/2)-1 (the even case admits both at the boundary).
  if (ell >= 2) {
    const std::int64_t lo_a = (ell - 1) / 2;      // = ceil((ell-2)/2)
    const std::int64_t hi_b = (ell - 2) / 2;      // = floor((ell-2)/2)
    for (std::int64_t m = lo_a; m <= ell - 2; ++m) {
      std::vector<std::int64_t> ones = prefix_ones(1, ell - 2);
      ones.push_back(ell + m);
      ones.push_back(ell + (ell - 1));
      emit(ones);
    }
    for (std::int64_t m = 0; m <= hi_b; ++m) {
      std::vector<std::int64_t> ones = prefix_ones(1, ell - 2);
      ones.push_back(ell + m);
      ones.push_back(2 * ell);
      emit(ones);
    }
  }

  // (iii) the alternating vector
  {
    std::vector<std::int64_t> ones;
    for (std::int64_t k = 2; k <= 2 * ell; k += 2) ones.push_back(k);
    emit(ones);
  }

  // (iv) ones at 2..ell-2 and ell, plus ell+m, ell+n with 1 <= m < n <= ell
  if (ell >= 5) {
    auto base = [&] {
      std::vector<std::int64_t> ones = prefix_ones(2, ell - 2);
      ones.push_back(ell);
      return ones;
    };
    for (std::int64_t m = 1; m <= ell - 2; ++m) {
      if (m == ell - 3) continue;
      for (std::int64_t n = m + 1; n <= ell - 2; ++n) {
        if (n == ell - 3) continue;
        auto ones = base();
        ones.push_back(ell + m);
        ones.push_back(ell + n);
        emit(ones);
      }
    }
    {
      auto ones = base();
      ones.push_back(ell + 1);
      ones.push_back(ell + (ell - 1));
      emit(ones);
    }
    if (ell >= 6) {
      auto ones = base();
      ones.push_back(ell + 2);
      ones.push_back(2 * ell);
      emit(ones);
    }
  }

  // (v) ones at 2..ell-1, plus ell+m, ell+n: stable for 2 <= m < n <= ell-2
  // and for m = 1 with n != ell-1.
  if (ell >= 3) {
    for (std::int64_t m = 2; m <= ell - 2; ++m) {
      for (std::int64_t n = m + 1; n <= ell - 2; ++n) {
        std::vector<std::int64_t> ones = prefix_ones(2, ell - 1);
        ones.push_back(ell + m);
        ones.push_back(ell + n);
        emit(ones);
      }
    }
    for (std::int64_t n = 2; n <= ell; ++n) {
      if (n == ell - 1) continue;
      std::vector<std::int64_t> ones = prefix_ones(2, ell - 1);
      ones.push_back(ell + 1);
      ones.push_back(ell + n);
      emit(ones);
    }
  }

  return {seen.begin(), seen.end()};
}

std::uint64_t family_vector_count(std::int64_t ell) {
  if (ell < 6) throw UnsupportedEll(ell);
  const std::uint64_t u = std::uint64_t(ell);
  return u * u - 3 * u + 10 + (ell % 2 == 0 ? 1 : 0);
}

std::uint64_t stable_lower_bound(std::int64_t ell) {
  if (ell < 6) throw UnsupportedEll(ell);
  const std::uint64_t u = std::uint64_t(ell);
  return u * u - 3 * u + 10;
}

NumericalSemigroup shift_up(const NumericalSemigroup& s) {
  const std::int64_t g = s.genus(), t = s.type();
  if (3 * t < 2 * g - 1) throw HypothesisViolated(g, t);
  std::vector<std::int64_t> gaps{1};
  for (std::int64_t x : s.gaps()) gaps.push_back(x + 1);
  return NumericalSemigroup::from_gap_set(gaps);
}

NumericalSemigroup shift_down(const NumericalSemigroup& s) {
  const std::int64_t g = s.genus(), t = s.type();
  if (g < 1 || 3 * t < 2 * g) throw HypothesisViolated(g, t);
  std::vector<std::int64_t> gaps;
  for (std::int64_t x : s.gaps())
    if (x != 1) gaps.push_back(x - 1);
  return NumericalSemigroup::from_gap_set(gaps);
}

}  // namespace sgtree
