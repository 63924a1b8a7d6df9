#include "sgtree/tree.hpp"

#include <algorithm>
#include <sstream>

namespace sgtree {

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  s.for_each_effective_generator(
      [&](std::int64_t x) { out.push_back(s.without_generator(x)); });
  return out;
}

TreeStats& TreeStats::operator+=(const TreeStats& other) {
  if (counts.genus_max() > 0) counts += other.counts;
  if (leaf_counts.genus_max() > 0) leaf_counts += other.leaf_counts;
  for (std::size_t g = 0; g < profiles.size(); ++g)
    for (std::size_t t = 0; t < profiles[g].size(); ++t)
      for (std::size_t i = 0; i < profiles[g][t].size(); ++i)
        profiles[g][t][i] += other.profiles[g][t][i];
  return *this;
}

TreeStats collect_stats(const ExplorationConfig& cfg) {
  validate(cfg);
  TreeStats init;
  if (cfg.collect.counts) init.counts = CountTable(cfg.genus_max);
  if (cfg.collect.leaf_counts) init.leaf_counts = CountTable(cfg.genus_max);
  if (cfg.collect.descendant_profiles) {
    init.profiles.resize(std::size_t(cfg.genus_max));
    for (std::int64_t g = 1; g <= cfg.genus_max; ++g) {
      init.profiles[std::size_t(g - 1)].resize(std::size_t(g));
      for (std::int64_t t = 1; t <= g; ++t)
        init.profiles[std::size_t(g - 1)][std::size_t(t - 1)].assign(std::size_t(g + 1), 0);
    }
  }

  const bool want_counts = cfg.collect.counts;
  const bool want_leaves = cfg.collect.leaf_counts;
  const bool want_profiles = cfg.collect.descendant_profiles;

  auto visit = [=](TreeStats& st, const NumericalSemigroup& s, std::int64_t depth) {
    if (depth == 0) return;  // the root carries no (g,t) cell
    const std::int64_t g = s.genus(), t = s.type();
    if (want_counts) st.counts.add(g, t);
    if (want_leaves && is_leaf(s)) st.leaf_counts.add(g, t);
    if (want_profiles) {
      auto& row = st.profiles[std::size_t(g - 1)][std::size_t(t - 1)];
      s.for_each_effective_generator([&](std::int64_t x) {
        const std::int64_t ct = s.without_generator(x).type();
        row[std::size_t(ct - 1)] += 1;
      });
    }
  };
  return explore_accumulate(cfg, init, visit);
}

CountTable count_table(std::int64_t genus_max, unsigned threads) {
  ExplorationConfig cfg;
  cfg.genus_max = genus_max;
  cfg.parallel_split_depth = std::min<std::int64_t>(genus_max - 1, 7);
  cfg.threads = threads;
  cfg.collect = {true, false, false};
  return std::move(collect_stats(cfg).counts);
}

CountTable leaf_table(std::int64_t genus_max, unsigned threads) {
  ExplorationConfig cfg;
  cfg.genus_max = genus_max;
  cfg.parallel_split_depth = std::min<std::int64_t>(genus_max - 1, 7);
  cfg.threads = threads;
  cfg.collect = {false, true, false};
  return std::move(collect_stats(cfg).leaf_counts);
}

std::vector<std::uint64_t> descendant_type_profile(const NumericalSemigroup& s) {
  std::vector<std::uint64_t> profile(std::size_t(s.genus() + 1), 0);
  s.for_each_effective_generator([&](std::int64_t x) {
    profile[std::size_t(s.without_generator(x).type() - 1)] += 1;
  });
  return profile;
}

std::vector<std::uint64_t> family_profile(std::int64_t genus, std::int64_t type,
                                          unsigned threads) {
  if (type < 1 || type > genus) throw std::invalid_argument("need 1 <= t <= g");
  ExplorationConfig cfg;
  cfg.genus_max = genus;
  cfg.parallel_split_depth = std::min<std::int64_t>(genus - 1, 7);
  cfg.threads = threads;

  using Profile = std::vector<std::uint64_t>;
  struct Sum {
    Profile w;
    Sum& operator+=(const Sum& o) {
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += o.w[i];
      return *this;
    }
  };
  Sum init{Profile(std::size_t(genus + 1), 0)};
  auto visit = [=](Sum& st, const NumericalSemigroup& s, std::int64_t depth) {
    if (depth != genus || s.type() != type) return;
    s.for_each_effective_generator([&](std::int64_t x) {
      st.w[std::size_t(s.without_generator(x).type() - 1)] += 1;
    });
  };
  return explore_accumulate(cfg, init, visit).w;
}

std::string tree_dot(std::int64_t genus_max, TreeOrder order) {
  if (genus_max < 1 || genus_max > 8)
    throw std::invalid_argument("tree export supports genus_max in [1, 8]");

  struct Node {
    NumericalSemigroup s;
    std::size_t parent;  // index into previous level; unused for the root
  };
  std::vector<std::vector<Node>> levels(std::size_t(genus_max + 1));
  levels[0].push_back({NumericalSemigroup::natural_numbers(), 0});
  for (std::int64_t d = 0; d < genus_max; ++d) {
    for (std::size_t pi = 0; pi < levels[std::size_t(d)].size(); ++pi) {
      const NumericalSemigroup& p = levels[std::size_t(d)][pi].s;
      p.for_each_effective_generator([&](std::int64_t x) {
        levels[std::size_t(d + 1)].push_back({p.without_generator(x), pi});
      });
    }
    if (order == TreeOrder::type) {
      auto& lv = levels[std::size_t(d + 1)];
      std::stable_sort(lv.begin(), lv.end(), [](const Node& a, const Node& b) {
        if (a.s.type() != b.s.type()) return a.s.type() < b.s.type();
        return generator_tuple_less(a.s, b.s);
      });
    }
  }

  std::ostringstream os;
  os << "digraph semigroup_tree {\n  rankdir=TB;\n  node [shape=box];\n";
  // node ids: level offset + index within level
  std::vector<std::size_t> offset(levels.size(), 0);
  for (std::size_t d = 1; d < levels.size(); ++d)
    offset[d] = offset[d - 1] + levels[d - 1].size();
  for (std::size_t d = 0; d < levels.size(); ++d) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < levels[d].size(); ++i) os << " n" << offset[d] + i << ';';
    os << " }\n";
    for (std::size_t i = 0; i < levels[d].size(); ++i) {
      const NumericalSemigroup& s = levels[d][i].s;
      os << "  n" << offset[d] + i << " [label=\"⟨";
      const auto gens = s.minimal_generators();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) os << ',';
        os << gens[k];
      }
      os << "⟩ [g=" << s.genus() << ",t=" << s.type() << "]\"];\n";
    }
  }
  // edges need child -> parent-index maps per level; recompute positions
  for (std::size_t d = 1; d < levels.size(); ++d) {
    for (std::size_t i = 0; i < levels[d].size(); ++i) {
      os << "  n" << offset[d - 1] + levels[d][i].parent << " -> n" << offset[d] + i
         << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace sgtree
