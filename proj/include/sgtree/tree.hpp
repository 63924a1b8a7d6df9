#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sgtree/count_table.hpp"
#include "sgtree/semigroup.hpp"

namespace sgtree {

/// Hard cap on tree exploration depth; counts stay far below 2^64 here.
inline constexpr std::int64_t kGenusMaxLimit = 50;

struct CollectFlags {
  bool counts = true;
  bool leaf_counts = true;
  bool descendant_profiles = false;
};

struct ExplorationConfig {
  std::int64_t genus_max = 20;
  std::int64_t parallel_split_depth = 0;  // frontier genus handed to workers
  unsigned threads = 0;                   // 0 = hardware concurrency
  CollectFlags collect;
};

class InvalidExplorationConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void validate(const ExplorationConfig& cfg) {
  if (cfg.genus_max < 1 || cfg.genus_max > kGenusMaxLimit)
    throw InvalidExplorationConfig("genus_max must be in [1, " +
                                   std::to_string(kGenusMaxLimit) + "]");
  if (cfg.parallel_split_depth < 0 || cfg.parallel_split_depth >= cfg.genus_max)
    throw InvalidExplorationConfig("parallel_split_depth must satisfy 0 <= d < genus_max");
}

/// Descendants of S: one per minimal generator above the Frobenius number,
/// ordered by ascending removed generator.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s);

/// True when S has no minimal generator above its Frobenius number.
inline bool is_leaf(const NumericalSemigroup& s) { return !s.has_effective_generator(); }

namespace detail {

template <class Visit>
void walk_subtree(const NumericalSemigroup& s, std::int64_t depth, std::int64_t genus_max,
                  Visit& visit) {
  visit(s, depth);
  if (depth >= genus_max) return;
  s.for_each_effective_generator([&](std::int64_t x) {
    walk_subtree(s.without_generator(x), depth + 1, genus_max, visit);
  });
}

inline unsigned effective_threads(const ExplorationConfig& cfg) {
  unsigned n = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  return n ? n : 1;
}

/// Runs fn(i) for i = 0..count-1 across workers. A failure stops the
/// dispatch of further indexes and is rethrown on the calling thread.
template <class Fn>
void parallel_for(unsigned nthreads, std::size_t count, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  for (unsigned w = 0; w < nthreads; ++w) {
    workers.emplace_back([&, w] {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        try {
          fn(w, i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Visits every semigroup of genus <= genus_max exactly once, children in
/// canonical order. The serial prefix covers genus < parallel_split_depth;
/// subtrees rooted at the split depth are distributed across workers, so
/// the visitor must be safe to call concurrently whenever threads > 1 and
/// parallel_split_depth > 0. The multiset of visited nodes does not depend
/// on the split depth or thread count.
template <class Visit>
void explore(const ExplorationConfig& cfg, Visit&& visit) {
  validate(cfg);
  NumericalSemigroup root = NumericalSemigroup::natural_numbers();
  const unsigned nthreads = detail::effective_threads(cfg);

  if (nthreads <= 1 || cfg.parallel_split_depth == 0) {
    detail::walk_subtree(root, 0, cfg.genus_max, visit);
    return;
  }

  std::vector<NumericalSemigroup> frontier;
  auto prefix = [&](const NumericalSemigroup& s, std::int64_t depth) {
    if (depth < cfg.parallel_split_depth)
      visit(s, depth);
    else
      frontier.push_back(s);
  };
  detail::walk_subtree(root, 0, cfg.parallel_split_depth, prefix);

  detail::parallel_for(nthreads, frontier.size(), [&](unsigned, std::size_t i) {
    detail::walk_subtree(frontier[i], cfg.parallel_split_depth, cfg.genus_max, visit);
  });
}

/// Per-worker accumulation: each worker owns a private State copied from
/// `init`, merged once at the end in frontier order.
template <class State, class Visit>
State explore_accumulate(const ExplorationConfig& cfg, const State& init, Visit&& visit) {
  validate(cfg);
  NumericalSemigroup root = NumericalSemigroup::natural_numbers();
  const unsigned nthreads = detail::effective_threads(cfg);

  State total = init;
  if (nthreads <= 1 || cfg.parallel_split_depth == 0) {
    auto v = [&](const NumericalSemigroup& s, std::int64_t d) { visit(total, s, d); };
    detail::walk_subtree(root, 0, cfg.genus_max, v);
    return total;
  }

  std::vector<NumericalSemigroup> frontier;
  auto prefix = [&](const NumericalSemigroup& s, std::int64_t depth) {
    if (depth < cfg.parallel_split_depth)
      visit(total, s, depth);
    else
      frontier.push_back(s);
  };
  detail::walk_subtree(root, 0, cfg.parallel_split_depth, prefix);

  std::vector<State> partial(nthreads, init);
  detail::parallel_for(nthreads, frontier.size(), [&](unsigned w, std::size_t i) {
    State& mine = partial[w];
    auto v = [&](const NumericalSemigroup& s, std::int64_t d) { visit(mine, s, d); };
    detail::walk_subtree(frontier[i], cfg.parallel_split_depth, cfg.genus_max, v);
  });
  for (State& p : partial) total += p;
  return total;
}

/// Aggregated exploration output; profile entries are only filled when
/// the corresponding collect flag is set.
struct TreeStats {
  CountTable counts;       // n(g,t)
  CountTable leaf_counts;  // l(g,t)
  // profiles[g-1][t-1][i-1] = w_i over the family of genus g and type t
  std::vector<std::vector<std::vector<std::uint64_t>>> profiles;

  TreeStats& operator+=(const TreeStats& other);
};

TreeStats collect_stats(const ExplorationConfig& cfg);

/// n(g,t) for 1 <= t <= g <= genus_max.
CountTable count_table(std::int64_t genus_max, unsigned threads = 0);

/// l(g,t): same but restricted to leaves.
CountTable leaf_table(std::int64_t genus_max, unsigned threads = 0);

/// v_i(S) for i = 1..g(S)+1: children of S counted by type.
std::vector<std::uint64_t> descendant_type_profile(const NumericalSemigroup& s);

/// w_i over all semigroups of genus g and type t, i = 1..g+1.
std::vector<std::uint64_t> family_profile(std::int64_t genus, std::int64_t type,
                                          unsigned threads = 0);

enum class TreeOrder { generator, type };

/// DOT digraph of the tree to genus_max (capped at 8). Levels are emitted
/// top-down; with TreeOrder::type each level is sorted by ascending type,
/// ties broken by generator tuple.
std::string tree_dot(std::int64_t genus_max, TreeOrder order);

}  // namespace sgtree
