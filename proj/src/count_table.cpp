#include "sgtree/count_table.hpp"

namespace sgtree {

void CountTable::write_csv(std::ostream& os) const {
  os << "genus,type,count\n";
  for (std::int64_t g = 1; g <= genus_max_; ++g) {
    const auto& r = row(g);
    for (std::int64_t t = 1; t <= g; ++t)
      os << g << ',' << t << ',' << r[std::size_t(t - 1)] << '\n';
  }
}

void CountTable::write_matrix(std::ostream& os) const {
  for (std::int64_t g = 1; g <= genus_max_; ++g) {
    const auto& r = row(g);
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (t) os << ',';
      os << r[t];
    }
    os << '\n';
  }
}

}  // namespace sgtree
