#include "ghsimplex/gh_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace ghsimplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this size the parallel split is pure overhead.
constexpr int kParallelMinPoints = 12;

void atomic_min_double(std::atomic<double>& target, double v) {
  double cur = target.load(std::memory_order_relaxed);
  while (v < cur && !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

struct SearchContext {
  SearchContext(const ValidatedSpace& space, int m, double lambda, std::uint64_t node_budget,
                double incumbent)
      : space(space),
        n(space.size()),
        m(m),
        lambda(lambda),
        floor_term(space.diam() - lambda),
        node_budget(node_budget),
        flush_every(node_budget != 0 ? 1 : 1024),
        shared_best(incumbent) {}

  const ValidatedSpace& space;
  int n;
  int m;
  double lambda;
  double floor_term;  // diam X - lambda, a lower bound on every objective
  std::uint64_t node_budget;
  std::uint64_t flush_every;
  std::atomic<double> shared_best;
  std::atomic<std::uint64_t> nodes_total{0};
  std::atomic<bool> aborted{false};
};

// Partial assignment of a prefix of the points, used both as the parallel
// task unit and as the recursion state seed.
struct PrefixState {
  std::vector<int> labels;
  int used = 0;
  double diam = 0.0;
  double minsep = kInf;
};

struct WorkerState {
  double best = kInf;
  std::vector<int> witness;
  bool has_witness = false;
  std::uint64_t nodes = 0;
  std::uint64_t unflushed = 0;
};

double partial_bound(const SearchContext& ctx, double diam, double minsep) {
  double lb = std::max(diam, ctx.floor_term);
  if (minsep < kInf) lb = std::max(lb, ctx.lambda - minsep);
  return lb;
}

// Depth-first search over canonical label assignments. Points are assigned
// in index order; a point may open block k only when blocks 0..k-1 exist,
// so each leaf is reached exactly once with a canonical growth string and
// leaves appear in lexicographic order.
//
// Witness rule: the incumbent VALUE prunes with strict >, and with >= only
// once this worker holds a leaf found in-search at that value. This keeps
// the lexicographically smallest optimal leaf reachable even when the
// initial greedy bound is already tight.
void dfs(SearchContext& ctx, WorkerState& w, std::vector<int>& labels, int depth, int used,
         double cur_diam, double cur_minsep) {
  if (ctx.aborted.load(std::memory_order_relaxed)) return;
  ++w.nodes;
  if (++w.unflushed >= ctx.flush_every) {
    const std::uint64_t total =
        ctx.nodes_total.fetch_add(w.unflushed, std::memory_order_relaxed) + w.unflushed;
    w.unflushed = 0;
    if (ctx.node_budget != 0 && total > ctx.node_budget)
      ctx.aborted.store(true, std::memory_order_relaxed);
  }

  const double lb = partial_bound(ctx, cur_diam, cur_minsep);
  const double global = ctx.shared_best.load(std::memory_order_relaxed);
  if (lb > global) return;
  if (lb == global && w.has_witness && w.best == global) return;

  if (depth == ctx.n) {
    const double obj = lb;  // all pairs are accounted for at a leaf
    if (obj < w.best || (obj == w.best && !w.has_witness)) {
      w.best = obj;
      w.witness = labels;
      w.has_witness = true;
      atomic_min_double(ctx.shared_best, obj);
    }
    return;
  }

  const int child_cap = std::min(used, ctx.m - 1);
  for (int b = 0; b <= child_cap; ++b) {
    const int used_after = used + (b == used ? 1 : 0);
    if (ctx.n - depth - 1 < ctx.m - used_after) continue;  // cannot open the remaining blocks
    double nd = cur_diam;
    double ns = cur_minsep;
    for (int j = 0; j < depth; ++j) {
      const double dij = ctx.space.distance(depth, j);
      if (labels[j] == b)
        nd = std::max(nd, dij);
      else
        ns = std::min(ns, dij);
    }
    labels[depth] = b;
    dfs(ctx, w, labels, depth + 1, used_after, nd, ns);
  }
}

// Expands the root breadth-first until at least `target` prefixes exist (or
// the tree is exhausted). Expansion preserves lexicographic order.
std::vector<PrefixState> split_tasks(const SearchContext& ctx, std::size_t target) {
  std::vector<PrefixState> level;
  level.push_back(PrefixState{});
  int depth = 0;
  while (level.size() < target && depth < ctx.n) {
    std::vector<PrefixState> next;
    for (const PrefixState& node : level) {
      const int child_cap = std::min(node.used, ctx.m - 1);
      for (int b = 0; b <= child_cap; ++b) {
        const int used_after = node.used + (b == node.used ? 1 : 0);
        if (ctx.n - depth - 1 < ctx.m - used_after) continue;
        PrefixState child = node;
        for (int j = 0; j < depth; ++j) {
          const double dij = ctx.space.distance(depth, j);
          if (child.labels[j] == b)
            child.diam = std::max(child.diam, dij);
          else
            child.minsep = std::min(child.minsep, dij);
        }
        child.labels.push_back(b);
        child.used = used_after;
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
    ++depth;
  }
  return level;
}

void require_partition_args(const ValidatedSpace& space, int m, double lambda) {
  if (m < 1 || m > space.size()) throw BadBlockCount(m, space.size());
  if (!(lambda > 0.0)) throw NonpositiveLambda(lambda);
}

}  // namespace

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GHSIMPLEX_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1 && parsed <= 1024)
      return static_cast<int>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

double gh_to_point(const ValidatedSpace& space) { return space.diam() / 2.0; }

std::pair<double, Partition> greedy_upper_bound(const ValidatedSpace& space, int m,
                                                double lambda) {
  require_partition_args(space, m, lambda);
  const int n = space.size();

  // Farthest-first seeds starting from index 0; ties to the smallest index.
  std::vector<int> seeds = {0};
  std::vector<bool> is_seed(static_cast<std::size_t>(n), false);
  is_seed[0] = true;
  std::vector<double> seed_dist(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seed_dist[static_cast<std::size_t>(i)] = space.distance(i, 0);
  while (static_cast<int>(seeds.size()) < m) {
    int pick = -1;
    double far = -1.0;
    for (int i = 0; i < n; ++i) {
      if (is_seed[static_cast<std::size_t>(i)]) continue;
      if (seed_dist[static_cast<std::size_t>(i)] > far) {
        far = seed_dist[static_cast<std::size_t>(i)];
        pick = i;
      }
    }
    seeds.push_back(pick);
    is_seed[static_cast<std::size_t>(pick)] = true;
    for (int i = 0; i < n; ++i)
      seed_dist[static_cast<std::size_t>(i)] =
          std::min(seed_dist[static_cast<std::size_t>(i)], space.distance(i, pick));
  }

  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> assigned;
  double cur_diam = 0.0;
  double cur_minsep = kInf;
  const double floor_term = space.diam() - lambda;

  const auto place = [&](int point, int block) {
    for (int j : assigned) {
      const double d = space.distance(point, j);
      if (label[static_cast<std::size_t>(j)] == block)
        cur_diam = std::max(cur_diam, d);
      else
        cur_minsep = std::min(cur_minsep, d);
    }
    label[static_cast<std::size_t>(point)] = block;
    assigned.push_back(point);
  };

  for (std::size_t k = 0; k < seeds.size(); ++k) place(seeds[k], static_cast<int>(k));

  for (int i = 0; i < n; ++i) {
    if (label[static_cast<std::size_t>(i)] != -1) continue;
    int best_block = 0;
    double best_obj = kInf;
    for (int b = 0; b < m; ++b) {
      double nd = cur_diam;
      double ns = cur_minsep;
      for (int j : assigned) {
        const double d = space.distance(i, j);
        if (label[static_cast<std::size_t>(j)] == b)
          nd = std::max(nd, d);
        else
          ns = std::min(ns, d);
      }
      double obj = std::max(nd, floor_term);
      if (ns < kInf) obj = std::max(obj, lambda - ns);
      if (obj < best_obj) {  // strict keeps the smallest block label on ties
        best_obj = obj;
        best_block = b;
      }
    }
    place(i, best_block);
  }

  // Canonical relabel by first occurrence in index order.
  std::vector<int> relabel(static_cast<std::size_t>(m), -1);
  std::vector<int> rgs(static_cast<std::size_t>(n));
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int& lab = relabel[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])];
    if (lab == -1) lab = next++;
    rgs[static_cast<std::size_t>(i)] = lab;
  }
  Partition d = Partition::from_rgs(std::move(rgs));
  return {objective(space, d, lambda), std::move(d)};
}

GHResult brute_force_min(const ValidatedSpace& space, int m, double lambda,
                         std::uint64_t budget) {
  require_partition_args(space, m, lambda);
  if (budget == 0) budget = kDefaultBruteBudget;
  const std::uint64_t cap = budget == std::numeric_limits<std::uint64_t>::max() ? budget : budget + 1;
  const std::uint64_t count = stirling_second_clamped(space.size(), m, cap);
  if (count > budget) throw BudgetExceeded(count, budget);

  GHResult result;
  result.regime = Regime::Partition;
  result.optimal = true;
  double best = kInf;
  std::optional<Partition> witness;
  std::uint64_t scanned = 0;
  for (auto it = PartitionRange(space.size(), m).begin(); it != std::default_sentinel; ++it) {
    const Partition d = *it;
    const double obj = objective(space, d, lambda);
    ++scanned;
    if (obj < best) {  // first hit in lex order is the lex-min witness
      best = obj;
      witness = d;
    }
  }
  result.twice_distance = best;
  result.witness = std::move(witness);
  result.nodes_explored = scanned;
  return result;
}

GHResult branch_and_bound(const ValidatedSpace& space, int m, double lambda,
                          std::uint64_t node_budget, int threads) {
  require_partition_args(space, m, lambda);
  const int n = space.size();

  auto [greedy_value, greedy_witness] = greedy_upper_bound(space, m, lambda);

  SearchContext ctx(space, m, lambda, node_budget, greedy_value);

  const int effective = resolve_thread_count(threads);
  const bool parallel = effective > 1 && n >= kParallelMinPoints && m >= 2;

  std::vector<WorkerState> workers;
  if (!parallel) {
    workers.resize(1);
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    dfs(ctx, workers[0], labels, 0, 0, 0.0, kInf);
    ctx.nodes_total.fetch_add(workers[0].unflushed, std::memory_order_relaxed);
    workers[0].unflushed = 0;
  } else {
    const std::vector<PrefixState> tasks =
        split_tasks(ctx, static_cast<std::size_t>(effective) * 8);
    workers.resize(static_cast<std::size_t>(effective));
    std::atomic<std::size_t> next_task{0};
    std::vector<std::thread> pool;
    pool.reserve(workers.size());
    for (WorkerState& w : workers) {
      pool.emplace_back([&ctx, &tasks, &next_task, &w, n] {
        std::vector<int> labels(static_cast<std::size_t>(n), 0);
        for (;;) {
          const std::size_t t = next_task.fetch_add(1, std::memory_order_relaxed);
          if (t >= tasks.size()) break;
          if (ctx.aborted.load(std::memory_order_relaxed)) break;
          const PrefixState& task = tasks[t];
          std::copy(task.labels.begin(), task.labels.end(), labels.begin());
          dfs(ctx, w, labels, static_cast<int>(task.labels.size()), task.used, task.diam,
              task.minsep);
        }
        ctx.nodes_total.fetch_add(w.unflushed, std::memory_order_relaxed);
        w.unflushed = 0;
      });
    }
    for (std::thread& t : pool) t.join();
  }

  // Deterministic reduce: minimum value, then the lexicographically
  // smallest in-search witness; the greedy pair is only a fallback.
  double best_value = greedy_value;
  std::vector<int> best_rgs = greedy_witness.rgs();
  bool from_search = false;
  for (const WorkerState& w : workers) {
    if (!w.has_witness) continue;
    if (w.best < best_value) {
      best_value = w.best;
      best_rgs = w.witness;
      from_search = true;
    } else if (w.best == best_value && (!from_search || w.witness < best_rgs)) {
      best_rgs = w.witness;
      from_search = true;
    }
  }

  GHResult result;
  result.twice_distance = best_value;
  result.witness = Partition::from_rgs(std::move(best_rgs));
  result.regime = Regime::Partition;
  result.optimal = !ctx.aborted.load(std::memory_order_relaxed);
  result.nodes_explored = ctx.nodes_total.load(std::memory_order_relaxed);
  return result;
}

GHResult gh_to_simplex(const ValidatedSpace& space, SimplexSpec spec,
                       const SolveOptions& options) {
  if (spec.m < 1) throw BadBlockCount(spec.m, space.size());
  if (!(spec.lambda > 0.0)) throw NonpositiveLambda(spec.lambda);
  const int n = space.size();

  if (spec.m == 1) {
    GHResult result;
    result.twice_distance = space.diam();
    result.regime = Regime::Point;
    result.optimal = true;
    return result;
  }
  if (spec.m > n) {
    GHResult result;
    result.twice_distance = std::max(spec.lambda, space.diam() - spec.lambda);
    result.regime = Regime::LargeM;
    result.optimal = true;
    return result;
  }

  Strategy strategy = options.strategy;
  if (strategy == Strategy::Auto) {
    const std::uint64_t size = stirling_second_clamped(n, spec.m, kDefaultBruteBudget + 1);
    strategy = size <= kDefaultBruteBudget ? Strategy::Brute : Strategy::Bnb;
  }
  switch (strategy) {
    case Strategy::Brute:
      return brute_force_min(space, spec.m, spec.lambda,
                             options.budget != 0 ? options.budget : kDefaultBruteBudget);
    case Strategy::Bnb:
      return branch_and_bound(space, spec.m, spec.lambda, options.budget, options.threads);
    case Strategy::Greedy: {
      auto [value, witness] = greedy_upper_bound(space, spec.m, spec.lambda);
      GHResult result;
      result.twice_distance = value;
      result.witness = std::move(witness);
      result.regime = Regime::Partition;
      result.optimal = false;
      return result;
    }
    case Strategy::Auto:
      break;  // resolved above
  }
  throw Error("unreachable strategy dispatch");
}

std::vector<double> candidate_values(const ValidatedSpace& space, double lambda) {
  if (!(lambda > 0.0)) throw NonpositiveLambda(lambda);
  std::vector<double> values = {0.0};
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j) {
      const double d = space.distance(i, j);
      values.push_back(d);
      if (lambda - d >= 0.0) values.push_back(lambda - d);
    }
  if (space.diam() - lambda >= 0.0) values.push_back(space.diam() - lambda);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace ghsimplex
