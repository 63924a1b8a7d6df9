#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgtree/semigroup.hpp"

namespace sgtree {

class GapVectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnbalancedGapVector : public GapVectorError {
 public:
  UnbalancedGapVector()
      : GapVectorError("gap vectors need an equal number of zeros and ones") {}
};

class GenusTooSmall : public GapVectorError {
 public:
  GenusTooSmall(std::int64_t genus, std::int64_t ell)
      : GapVectorError("genus " + std::to_string(genus) +
                       " does not exceed the half-length " + std::to_string(ell)) {}
};

class UnsupportedEll : public GapVectorError {
 public:
  explicit UnsupportedEll(std::int64_t ell)
      : GapVectorError("half-length " + std::to_string(ell) +
                       " is outside the supported range") {}
};

class HypothesisViolated : public GapVectorError {
 public:
  HypothesisViolated(std::int64_t genus, std::int64_t type)
      : GapVectorError("shift requires the type bound 3t >= 2g-1; got g=" +
                       std::to_string(genus) + ", t=" + std::to_string(type)) {}
};

/// Balanced (0/1)-vector of even length 2*ell recording which of the 2*ell
/// candidate positions above g - ell are gaps.
class GapVector {
 public:
  GapVector() = default;  // ell = 0, the empty vector

  explicit GapVector(std::vector<std::uint8_t> bits);

  /// Parses a contiguous bit string such as "0110".
  static GapVector parse(std::string_view s);

  std::int64_t ell() const { return std::int64_t(bits_.size() / 2); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// 1-based position access, v_i for 1 <= i <= 2*ell.
  bool at(std::int64_t i) const { return bits_[std::size_t(i - 1)] != 0; }

  std::string str() const;

  /// |{ j-i : i < j, v_i = 0, v_j = 1 }|, collected in a difference-presence
  /// bitmask of width 2*ell-1.
  std::int64_t cotype() const;

  friend auto operator<=>(const GapVector& a, const GapVector& b) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// The gap vector v(S) of a semigroup with genus >= 1; has length
/// 2*(g - t), empty when t = g.
GapVector gap_vector_of(const NumericalSemigroup& s);

/// {1..g-ell} together with the positions above g-ell flagged by v.
/// Requires g > ell; the result always has exactly g values.
std::vector<std::int64_t> gap_set_of(std::int64_t genus, const GapVector& v);

/// The semigroup whose gaps are gap_set_of(genus, v); throws NotASemigroup
/// when the complement fails closure (possible only for genus < 3*ell-1).
NumericalSemigroup semigroup_from_vector(std::int64_t genus, const GapVector& v);

/// The difference set { j-i : v_i = 0, v_j = 1, i < j }, which predicts
/// Gaps \ PF of semigroup_from_vector(genus, v) for genus >= 3*ell-1.
std::vector<std::int64_t> predicted_gaps_minus_pf(std::int64_t genus, const GapVector& v);

/// All balanced vectors of length 2*ell with cotype exactly ell, in
/// lexicographic order of their 1-position sets. Supported for ell <= 16.
std::vector<GapVector> stable_vectors(std::int64_t ell);

/// The hand-listed catalogs for ell <= 3 (1, 3 and 7 vectors; the empty
/// vector for ell = 0).
std::vector<GapVector> catalog_small_ell(std::int64_t ell);

/// The five parametric families of stable vectors, deduplicated. Every
/// returned vector is re-validated to have cotype exactly ell.
std::vector<GapVector> family_vectors(std::int64_t ell);

/// Count of family vectors predicted for ell >= 6 after deduplication:
/// ell^2 - 3*ell + 10, plus 1 for even ell.
std::uint64_t family_vector_count(std::int64_t ell);

/// ell^2 - 3*ell + 10, the proven lower bound on |V(ell)| for ell >= 6.
std::uint64_t stable_lower_bound(std::int64_t ell);

/// Genus/type shift: S of genus g and type t with 3t >= 2g-1 maps to a
/// semigroup of genus g+1 and type t+1 with the same gap vector.
NumericalSemigroup shift_up(const NumericalSemigroup& s);

/// Inverse of shift_up; requires genus >= 1 and 3t >= 2g.
NumericalSemigroup shift_down(const NumericalSemigroup& s);

}  // namespace sgtree
