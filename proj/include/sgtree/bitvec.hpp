#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sgtree {

/// Fixed-length bitset sized at construction. Sets up to 256 bits live
/// inline; longer ones spill to the heap. Bits at positions >= bit_size()
/// are kept zero at all times.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(std::size_t nbits)
      : nbits_(nbits), nwords_((nbits + 63) / 64) {
    if (nwords_ > kInlineWords) heap_.assign(nwords_, 0);
  }

  std::size_t bit_size() const { return nbits_; }
  std::size_t word_size() const { return nwords_; }

  const std::uint64_t* data() const {
    return nwords_ <= kInlineWords ? sbo_.data() : heap_.data();
  }
  std::uint64_t* data() {
    return nwords_ <= kInlineWords ? sbo_.data() : heap_.data();
  }

  bool test(std::size_t i) const {
    if (i >= nbits_) return false;
    return (data()[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < nbits_);
    data()[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < nbits_);
    data()[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    const std::uint64_t* w = data();
    std::size_t n = 0;
    for (std::size_t i = 0; i < nwords_; ++i) n += std::popcount(w[i]);
    return n;
  }

  bool none() const {
    const std::uint64_t* w = data();
    for (std::size_t i = 0; i < nwords_; ++i)
      if (w[i]) return false;
    return true;
  }

  /// Index of the highest set bit, or -1 when empty.
  std::int64_t highest() const {
    const std::uint64_t* w = data();
    for (std::size_t i = nwords_; i-- > 0;)
      if (w[i]) return std::int64_t(i) * 64 + (63 - std::countl_zero(w[i]));
    return -1;
  }

  /// Smallest set bit >= from, or -1 if none.
  std::int64_t lowest_from(std::size_t from) const {
    if (from >= nbits_) return -1;
    const std::uint64_t* w = data();
    std::size_t wi = from >> 6;
    std::uint64_t cur = w[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return std::int64_t(wi) * 64 + std::countr_zero(cur);
      if (++wi >= nwords_) return -1;
      cur = w[wi];
    }
  }

  /// Smallest clear bit >= from within [0, bit_size()), or -1 if none.
  std::int64_t lowest_zero_from(std::size_t from) const {
    const std::uint64_t* w = data();
    for (std::size_t i = from; i < nbits_; ++i) {
      std::size_t wi = i >> 6;
      if (w[wi] == ~std::uint64_t{0}) {  // skip saturated words
        i = wi * 64 + 63;
        continue;
      }
      if (!((w[wi] >> (i & 63)) & 1u)) return std::int64_t(i);
    }
    return -1;
  }

  /// Visits set bits in ascending order.
  template <class Fn>
  void for_each_set(Fn&& fn) const {
    const std::uint64_t* w = data();
    for (std::size_t i = 0; i < nwords_; ++i) {
      std::uint64_t cur = w[i];
      while (cur) {
        fn(std::int64_t(i) * 64 + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  /// Zeroes any bits at positions >= bit_size() in the last word.
  void mask_tail() {
    if (nbits_ & 63) data()[nwords_ - 1] &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
  }

  /// Set equality; lengths may differ, excess bits must be clear.
  friend bool operator==(const BitVec& a, const BitVec& b) {
    const BitVec& lo = a.nwords_ <= b.nwords_ ? a : b;
    const BitVec& hi = a.nwords_ <= b.nwords_ ? b : a;
    for (std::size_t i = 0; i < lo.nwords_; ++i)
      if (lo.data()[i] != hi.data()[i]) return false;
    for (std::size_t i = lo.nwords_; i < hi.nwords_; ++i)
      if (hi.data()[i]) return false;
    return true;
  }

 private:
  static constexpr std::size_t kInlineWords = 4;

  std::size_t nbits_ = 0;
  std::size_t nwords_ = 0;
  std::array<std::uint64_t, kInlineWords> sbo_{};
  std::vector<std::uint64_t> heap_;
};

/// dst |= (src << shift), clipped to dst's length.
inline void or_shifted(BitVec& dst, const BitVec& src, std::size_t shift) {
  const std::size_t ws = shift >> 6, bs = shift & 63;
  const std::uint64_t* s = src.data();
  std::uint64_t* d = dst.data();
  const std::size_t dn = dst.word_size(), sn = src.word_size();
  for (std::size_t i = 0; i < sn && i + ws < dn; ++i) {
    std::uint64_t v = s[i];
    if (!v) continue;
    d[i + ws] |= v << bs;
    if (bs && i + ws + 1 < dn) d[i + ws + 1] |= v >> (64 - bs);
  }
  dst.mask_tail();
}

/// acc &= ((src >> shift) | ones at positions >= tail_from).
/// Positions past src's end read as zero before the tail mask applies.
inline void and_shifted_down_with_tail(BitVec& acc, const BitVec& src,
                                       std::size_t shift, std::size_t tail_from) {
  const std::size_t ws = shift >> 6, bs = shift & 63;
  const std::uint64_t* s = src.data();
  std::uint64_t* d = acc.data();
  const std::size_t dn = acc.word_size(), sn = src.word_size();
  for (std::size_t i = 0; i < dn; ++i) {
    std::uint64_t v = 0;
    if (i + ws < sn) v = s[i + ws] >> bs;
    if (bs && i + ws + 1 < sn) v |= s[i + ws + 1] << (64 - bs);
    // tail mask for this word
    const std::size_t word_base = i * 64;
    if (tail_from <= word_base)
      v = ~std::uint64_t{0};
    else if (tail_from < word_base + 64)
      v |= (~std::uint64_t{0}) << (tail_from - word_base);
    d[i] &= v;
  }
  acc.mask_tail();
}

}  // namespace sgtree
