#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace sgtree {

/// Triangular table of 64-bit counts indexed by (genus, type) with
/// 1 <= type <= genus <= genus_max. Used for both n(g,t) and l(g,t).
class CountTable {
 public:
  CountTable() = default;
  explicit CountTable(std::int64_t genus_max) : genus_max_(genus_max) {
    if (genus_max < 1) throw std::invalid_argument("genus_max must be >= 1");
    rows_.resize(std::size_t(genus_max));
    for (std::int64_t g = 1; g <= genus_max; ++g)
      rows_[std::size_t(g - 1)].assign(std::size_t(g), 0);
  }

  std::int64_t genus_max() const { return genus_max_; }

  std::uint64_t at(std::int64_t genus, std::int64_t type) const {
    check(genus, type);
    return rows_[std::size_t(genus - 1)][std::size_t(type - 1)];
  }

  void add(std::int64_t genus, std::int64_t type, std::uint64_t delta = 1) {
    check(genus, type);
    rows_[std::size_t(genus - 1)][std::size_t(type - 1)] += delta;
  }

  const std::vector<std::uint64_t>& row(std::int64_t genus) const {
    check(genus, 1);
    return rows_[std::size_t(genus - 1)];
  }

  std::uint64_t row_sum(std::int64_t genus) const {
    std::uint64_t s = 0;
    for (std::uint64_t c : row(genus)) s += c;
    return s;
  }

  /// Row sums for g = 1..genus_max (index 0 holds g=1).
  std::vector<std::uint64_t> row_sums() const {
    std::vector<std::uint64_t> out;
    out.reserve(rows_.size());
    for (std::int64_t g = 1; g <= genus_max_; ++g) out.push_back(row_sum(g));
    return out;
  }

  CountTable& operator+=(const CountTable& other) {
    if (other.genus_max_ != genus_max_)
      throw std::invalid_argument("cannot merge tables with different genus bounds");
    for (std::size_t g = 0; g < rows_.size(); ++g)
      for (std::size_t t = 0; t < rows_[g].size(); ++t) rows_[g][t] += other.rows_[g][t];
    return *this;
  }

  friend bool operator==(const CountTable&, const CountTable&) = default;

  /// CSV with header `genus,type,count`, rows sorted by (genus, type).
  void write_csv(std::ostream& os) const;

  /// One line per genus: counts for t = 1..g, comma separated.
  void write_matrix(std::ostream& os) const;

 private:
  void check(std::int64_t genus, std::int64_t type) const {
    if (genus < 1 || genus > genus_max_ || type < 1 || type > genus)
      throw std::out_of_range("count table index outside 1 <= t <= g <= genus_max");
  }

  std::int64_t genus_max_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace sgtree
