#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgtree/bitvec.hpp"

namespace sgtree {

class SemigroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyGeneratorSet : public SemigroupError {
 public:
  EmptyGeneratorSet() : SemigroupError("generator set is empty") {}
};

class NonCoprimeGenerators : public SemigroupError {
 public:
  explicit NonCoprimeGenerators(std::int64_t gcd)
      : SemigroupError("generators have gcd " + std::to_string(gcd) +
                       "; the complement would be infinite"),
        gcd_(gcd) {}
  std::int64_t gcd() const { return gcd_; }

 private:
  std::int64_t gcd_;
};

/// Thrown when a proposed gap set fails additive closure of its complement.
/// Carries a witness pair: x and y are non-gaps whose sum is a gap.
class NotASemigroup : public SemigroupError {
 public:
  NotASemigroup(std::int64_t x, std::int64_t y)
      : SemigroupError("complement is not closed: " + std::to_string(x) + " + " +
                       std::to_string(y) + " = " + std::to_string(x + y) +
                       " is a gap"),
        x_(x),
        y_(y) {}
  std::int64_t x() const { return x_; }
  std::int64_t y() const { return y_; }

 private:
  std::int64_t x_, y_;
};

class RootHasNoParent : public SemigroupError {
 public:
  RootHasNoParent() : SemigroupError("the full set of non-negative integers has no parent") {}
};

class SieveLimitExceeded : public SemigroupError {
 public:
  explicit SieveLimitExceeded(std::int64_t bound)
      : SemigroupError("membership sieve bound " + std::to_string(bound) +
                       " exceeds the supported table size") {}
};

/// PF(S) together with its cardinality (the type). For the root the
/// conventional value {-1} with type 1 is used.
struct PseudoFrobeniusSet {
  std::vector<std::int64_t> elements;
  std::int64_t type = 0;
};

/// The four equivalent maximal-type conditions, evaluated independently.
struct MaxTypeCheck {
  bool type_equals_genus = false;
  bool multiplicity_is_frobenius_plus_one = false;
  bool frobenius_below_multiplicity = false;
  bool is_interval_generated = false;  // <c, c+1, ..., 2c-1> shape

  bool all() const {
    return type_equals_genus && multiplicity_is_frobenius_plus_one &&
           frobenius_below_multiplicity && is_interval_generated;
  }
  bool agree() const {
    return type_equals_genus == multiplicity_is_frobenius_plus_one &&
           type_equals_genus == frobenius_below_multiplicity &&
           type_equals_genus == is_interval_generated;
  }
};

/// A numerical semigroup in canonical form: the gap set as a dense bit
/// table of length F+1, plus cached scalars (Frobenius number, genus,
/// multiplicity, type) and the minimal-generator bit table over
/// [0, F+m]. Values are immutable after construction and cheap to copy;
/// they are safe to share between threads.
class NumericalSemigroup {
 public:
  /// The root: all non-negative integers. F = -1, genus 0, type 1.
  static NumericalSemigroup natural_numbers();

  /// Smallest semigroup containing 0 and the given generators.
  /// Requires gcd(gens) == 1. Membership is decided by a dynamic sieve
  /// over [0, min*max], re-verified (and extended) until m consecutive
  /// members follow the largest non-member.
  static NumericalSemigroup from_generators(const std::vector<std::int64_t>& gens);

  /// Semigroup whose gap set is exactly `gaps`; verifies that the
  /// complement is additively closed and reports a witness pair if not.
  static NumericalSemigroup from_gap_set(const std::vector<std::int64_t>& gaps);

  std::int64_t frobenius() const { return frobenius_; }
  std::int64_t genus() const { return genus_; }
  std::int64_t multiplicity() const { return multiplicity_; }
  std::int64_t type() const { return type_; }
  std::int64_t embedding_dimension() const { return embedding_dimension_; }

  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return !gap_bits_.test(std::size_t(x));
  }
  bool is_gap(std::int64_t x) const { return x >= 0 && !contains(x); }

  std::vector<std::int64_t> gaps() const;
  std::vector<std::int64_t> minimal_generators() const;
  PseudoFrobeniusSet pseudo_frobenius() const;
  std::vector<std::int64_t> gaps_minus_pf() const;

  /// The semigroup with the Frobenius number adjoined; genus drops by 1.
  NumericalSemigroup parent() const;

  /// The semigroup with minimal generator x (x > F) removed; genus grows
  /// by 1 and the Frobenius number of the result is x.
  NumericalSemigroup without_generator(std::int64_t x) const;

  /// True when some minimal generator exceeds the Frobenius number,
  /// i.e. the node has descendants in the semigroup tree.
  bool has_effective_generator() const {
    return mingen_bits_.lowest_from(std::size_t(frobenius_ + 1)) >= 0;
  }

  /// Visits minimal generators > F in ascending order.
  template <class Fn>
  void for_each_effective_generator(Fn&& fn) const {
    std::int64_t x = mingen_bits_.lowest_from(std::size_t(frobenius_ + 1));
    while (x >= 0) {
      fn(x);
      x = mingen_bits_.lowest_from(std::size_t(x) + 1);
    }
  }

  MaxTypeCheck max_type_check() const;

  /// Canonical one-line form: gens=[..] gaps=[..] F=.. g=.. t=.. m=..
  std::string canonical_string() const;

  const BitVec& gap_bits() const { return gap_bits_; }
  const BitVec& mingen_bits() const { return mingen_bits_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.frobenius_ == b.frobenius_ && a.genus_ == b.genus_ &&
           a.gap_bits_ == b.gap_bits_;
  }

 private:
  NumericalSemigroup() = default;
  NumericalSemigroup(BitVec gap_bits, std::int64_t frobenius, std::int64_t genus);

  void derive_invariants();  // multiplicity, minimal generators, type

  BitVec gap_bits_;     // bit i set <=> i is a gap; length F+1
  BitVec mingen_bits_;  // bit x set <=> x is a minimal generator; length F+m+1
  std::int64_t frobenius_ = -1;
  std::int64_t genus_ = 0;
  std::int64_t multiplicity_ = 1;
  std::int64_t type_ = 1;
  std::int64_t embedding_dimension_ = 1;
};

/// Deterministic strict total order on canonical forms (genus, then
/// Frobenius number, then gap bits). Usable for set containers.
bool canonical_less(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// Lexicographic order on the minimal-generator tuples.
bool generator_tuple_less(const NumericalSemigroup& a, const NumericalSemigroup& b);

struct SemigroupHash {
  std::size_t operator()(const NumericalSemigroup& s) const;
};

}  // namespace sgtree
