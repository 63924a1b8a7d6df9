#include "sgtree/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sgtree {
namespace {

// Largest sieve the generator constructor will allocate, in bits.
constexpr std::int64_t kMaxSieveBits = std::int64_t{1} << 26;

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Elements of the semigroup on [0, len), as a bit table. The gap table has
// length F+1 with a clear tail, so inverting its words marks everything
// above F as an element; words past the gap table are filled with ones.
BitVec elements_table(const BitVec& gap_bits, std::size_t len) {
  BitVec el(len);
  std::uint64_t* d = el.data();
  const std::uint64_t* g = gap_bits.data();
  const std::size_t gw = gap_bits.word_size();
  for (std::size_t i = 0; i < el.word_size(); ++i) d[i] = i < gw ? ~g[i] : ~std::uint64_t{0};
  el.mask_tail();
  el.set(0);
  return el;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(BitVec gap_bits, std::int64_t frobenius,
                                       std::int64_t genus)
    : gap_bits_(std::move(gap_bits)), frobenius_(frobenius), genus_(genus) {
  derive_invariants();
}

void NumericalSemigroup::derive_invariants() {
  if (frobenius_ < 0) {  // the root
    frobenius_ = -1;
    genus_ = 0;
    multiplicity_ = 1;
    type_ = 1;
    embedding_dimension_ = 1;
    mingen_bits_ = BitVec(2);
    mingen_bits_.set(1);
    return;
  }

  std::int64_t m = gap_bits_.lowest_zero_from(1);
  if (m < 0) m = frobenius_ + 1;  // gaps are exactly {1..F}
  multiplicity_ = m;

  const std::size_t len = std::size_t(frobenius_ + m + 1);
  BitVec elements = elements_table(gap_bits_, len);

  // x is a minimal generator iff x in the semigroup, x >= 1, and x is not
  // a sum of two positive elements. All candidates lie in [m, F+m].
  BitVec positive = elements;
  positive.reset(0);
  BitVec sums(len);
  std::int64_t a = positive.lowest_from(std::size_t(m));
  while (a >= 0 && a <= frobenius_) {
    or_shifted(sums, positive, std::size_t(a));
    a = positive.lowest_from(std::size_t(a) + 1);
  }
  mingen_bits_ = BitVec(len);
  {
    std::uint64_t* d = mingen_bits_.data();
    const std::uint64_t* p = positive.data();
    const std::uint64_t* s = sums.data();
    for (std::size_t i = 0; i < mingen_bits_.word_size(); ++i) d[i] = p[i] & ~s[i];
  }
  embedding_dimension_ = std::int64_t(mingen_bits_.count());

  // PF = gaps whose translate by every minimal generator lands in the
  // semigroup; generators above F shift everything past F and are skipped.
  BitVec acc(std::size_t(frobenius_ + 1));
  for (std::size_t i = 0; i < acc.word_size(); ++i) acc.data()[i] = ~std::uint64_t{0};
  acc.mask_tail();
  mingen_bits_.for_each_set([&](std::int64_t gen) {
    if (gen > frobenius_) return;
    and_shifted_down_with_tail(acc, elements, std::size_t(gen),
                               std::size_t(frobenius_ - gen + 1));
  });
  std::size_t t = 0;
  for (std::size_t i = 0; i < acc.word_size(); ++i)
    t += std::popcount(acc.data()[i] & gap_bits_.data()[i]);
  type_ = std::int64_t(t);
}

NumericalSemigroup NumericalSemigroup::natural_numbers() {
  NumericalSemigroup s;
  s.derive_invariants();
  return s;
}

NumericalSemigroup NumericalSemigroup::from_gap_set(const std::vector<std::int64_t>& gaps_in) {
  std::vector<std::int64_t> gaps = sorted_unique(gaps_in);
  if (!gaps.empty() && gaps.front() <= 0) {
    if (gaps.front() == 0) throw NotASemigroup(0, 0);  // 0 must belong
    throw std::invalid_argument("gap values must be positive");
  }
  if (gaps.empty()) return natural_numbers();

  const std::int64_t frobenius = gaps.back();
  BitVec gap_bits(std::size_t(frobenius + 1));
  for (std::int64_t x : gaps) gap_bits.set(std::size_t(x));

  // closure: no two positive non-gaps may sum to a gap
  BitVec elements = elements_table(gap_bits, std::size_t(frobenius + 1));
  elements.reset(0);
  std::int64_t x = elements.lowest_from(1);
  while (x >= 0) {
    BitVec hits(std::size_t(frobenius + 1));
    or_shifted(hits, elements, std::size_t(x));
    const std::uint64_t* h = hits.data();
    const std::uint64_t* g = gap_bits.data();
    for (std::size_t i = 0; i < hits.word_size(); ++i) {
      if (std::uint64_t bad = h[i] & g[i]) {
        std::int64_t z = std::int64_t(i) * 64 + std::countr_zero(bad);
        throw NotASemigroup(x, z - x);
      }
    }
    x = elements.lowest_from(std::size_t(x) + 1);
  }

  return NumericalSemigroup(std::move(gap_bits), frobenius, std::int64_t(gaps.size()));
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<std::int64_t>& gens_in) {
  if (gens_in.empty()) throw EmptyGeneratorSet();
  std::vector<std::int64_t> gens = sorted_unique(gens_in);
  if (gens.front() <= 0) throw std::invalid_argument("generators must be positive");

  std::int64_t g = 0;
  for (std::int64_t a : gens) g = std::gcd(g, a);
  if (g != 1) throw NonCoprimeGenerators(g);
  if (gens.front() == 1) return natural_numbers();

  const std::int64_t m = gens.front();
  if (gens.back() > kMaxSieveBits / m) throw SieveLimitExceeded(gens.back());
  std::int64_t bound = m * gens.back();
  while (true) {
    if (bound + 1 > kMaxSieveBits) throw SieveLimitExceeded(bound);
    BitVec member(std::size_t(bound + 1));
    member.set(0);
    for (std::int64_t x = gens.front(); x <= bound; ++x) {
      for (std::int64_t a : gens) {
        if (a > x) break;
        if (member.test(std::size_t(x - a))) {
          member.set(std::size_t(x));
          break;
        }
      }
    }
    std::int64_t frobenius = -1;
    for (std::int64_t x = bound; x >= 1; --x) {
      if (!member.test(std::size_t(x))) {
        frobenius = x;
        break;
      }
    }
    if (frobenius < 0) throw std::logic_error("sieve found no gap for non-trivial generators");
    if (bound - frobenius < m) {  // not yet m consecutive members; extend
      bound *= 2;
      continue;
    }
    BitVec gap_bits(std::size_t(frobenius + 1));
    std::int64_t genus = 0;
    for (std::int64_t x = 1; x <= frobenius; ++x) {
      if (!member.test(std::size_t(x))) {
        gap_bits.set(std::size_t(x));
        ++genus;
      }
    }
    return NumericalSemigroup(std::move(gap_bits), frobenius, genus);
  }
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  out.reserve(std::size_t(genus_));
  gap_bits_.for_each_set([&](std::int64_t x) { out.push_back(x); });
  return out;
}

std::vector<std::int64_t> NumericalSemigroup::minimal_generators() const {
  std::vector<std::int64_t> out;
  out.reserve(std::size_t(embedding_dimension_));
  mingen_bits_.for_each_set([&](std::int64_t x) { out.push_back(x); });
  return out;
}

PseudoFrobeniusSet NumericalSemigroup::pseudo_frobenius() const {
  if (genus_ == 0) return {{-1}, 1};
  PseudoFrobeniusSet pf;
  gap_bits_.for_each_set([&](std::int64_t x) {
    bool all_in = true;
    mingen_bits_.for_each_set([&](std::int64_t a) { all_in = all_in && contains(x + a); });
    if (all_in) pf.elements.push_back(x);
  });
  pf.type = std::int64_t(pf.elements.size());
  return pf;
}

std::vector<std::int64_t> NumericalSemigroup::gaps_minus_pf() const {
  const PseudoFrobeniusSet pf = pseudo_frobenius();
  std::vector<std::int64_t> out;
  std::size_t k = 0;
  gap_bits_.for_each_set([&](std::int64_t x) {
    while (k < pf.elements.size() && pf.elements[k] < x) ++k;
    if (k >= pf.elements.size() || pf.elements[k] != x) out.push_back(x);
  });
  return out;
}

NumericalSemigroup NumericalSemigroup::parent() const {
  if (genus_ == 0) throw RootHasNoParent();
  const std::int64_t new_frob = genus_ == 1 ? -1 : [&] {
    // highest gap strictly below F
    for (std::int64_t x = frobenius_ - 1; x >= 1; --x)
      if (gap_bits_.test(std::size_t(x))) return x;
    return std::int64_t(-1);
  }();
  if (new_frob < 0) return natural_numbers();
  BitVec gap_bits(std::size_t(new_frob + 1));
  for (std::size_t i = 0; i < gap_bits.word_size(); ++i)
    gap_bits.data()[i] = gap_bits_.data()[i];
  gap_bits.mask_tail();
  return NumericalSemigroup(std::move(gap_bits), new_frob, genus_ - 1);
}

NumericalSemigroup NumericalSemigroup::without_generator(std::int64_t x) const {
  if (x <= frobenius_ || !mingen_bits_.test(std::size_t(x)))
    throw std::invalid_argument("not a minimal generator above the Frobenius number");
  BitVec gap_bits(std::size_t(x + 1));
  for (std::size_t i = 0; i < gap_bits_.word_size(); ++i)
    gap_bits.data()[i] = gap_bits_.data()[i];
  gap_bits.set(std::size_t(x));
  return NumericalSemigroup(std::move(gap_bits), x, genus_ + 1);
}

MaxTypeCheck NumericalSemigroup::max_type_check() const {
  MaxTypeCheck c;
  c.type_equals_genus = type_ == genus_;
  c.multiplicity_is_frobenius_plus_one = multiplicity_ == frobenius_ + 1;
  c.frobenius_below_multiplicity = frobenius_ < multiplicity_;
  // <c, c+1, ..., 2c-1> has gap set exactly {1, ..., c-1}
  c.is_interval_generated =
      genus_ >= 1 && frobenius_ == genus_ && std::int64_t(gap_bits_.count()) == genus_ &&
      gap_bits_.lowest_zero_from(1) < 0;
  return c;
}

std::string NumericalSemigroup::canonical_string() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<std::int64_t>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    os << ']';
  };
  os << "gens=";
  list(minimal_generators());
  os << " gaps=";
  list(gaps());
  os << " F=" << frobenius_ << " g=" << genus_ << " t=" << type_ << " m=" << multiplicity_;
  return os.str();
}

bool canonical_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (a.genus() != b.genus()) return a.genus() < b.genus();
  if (a.frobenius() != b.frobenius()) return a.frobenius() < b.frobenius();
  const BitVec& x = a.gap_bits();
  const BitVec& y = b.gap_bits();
  for (std::size_t i = std::max(x.word_size(), y.word_size()); i-- > 0;) {
    const std::uint64_t xw = i < x.word_size() ? x.data()[i] : 0;
    const std::uint64_t yw = i < y.word_size() ? y.data()[i] : 0;
    if (xw != yw) return xw < yw;
  }
  return false;
}

bool generator_tuple_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return a.minimal_generators() < b.minimal_generators();
}

std::size_t SemigroupHash::operator()(const NumericalSemigroup& s) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ std::uint64_t(s.frobenius() + 1);
  const BitVec& bits = s.gap_bits();
  for (std::size_t i = 0; i < bits.word_size(); ++i) {
    h ^= bits.data()[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return std::size_t(h);
}

}  // namespace sgtree
