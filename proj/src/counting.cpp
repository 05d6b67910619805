#include "rtl/counting.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <bit>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "rtl/errors.hpp"

namespace rtl {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RTL_BUDGET")) {
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc{} && *end == '\0' && value > 0) return value;
  }
  return kDefaultBudget;
}

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t nodes) {
    const std::uint64_t total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > limit_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration exceeded " + std::to_string(limit_) + " backtracking nodes");
    }
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// Batches node charges so workers touch the shared counter rarely.
class Meter {
 public:
  explicit Meter(Budget& budget) : budget_(budget) {}
  void tick() {
    if (++pending_ == kBatch) flush();
  }
  void flush() {
    const std::uint64_t n = pending_;
    pending_ = 0;
    if (n) budget_.charge(n);
  }

 private:
  static constexpr std::uint64_t kBatch = 4096;
  Budget& budget_;
  std::uint64_t pending_ = 0;
};

unsigned resolve_jobs(unsigned jobs, std::size_t work_items) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(work_items, 1)));
}

// Runs make_worker()(item) for item in [0, items) across `jobs` threads and
// sums the results. Each thread owns its worker.
template <typename MakeWorker>
std::uint64_t parallel_sum(std::size_t items, unsigned jobs, MakeWorker make_worker) {
  jobs = resolve_jobs(jobs, items);
  if (jobs == 1) {
    auto worker = make_worker();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < items; ++i) sum += worker(i);
    worker.finish();
    return sum;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::uint64_t> partial(jobs, 0);
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      try {
        auto worker = make_worker();
        for (std::size_t i = next++; i < items && !failed; i = next++) partial[t] += worker(i);
        worker.finish();
      } catch (...) {
        failed = true;
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

bool contains(const std::vector<Colour>& used, Colour c) {
  return std::find(used.begin(), used.end(), c) != used.end();
}

// Depth-first search for cycles anchored at their minimum vertex; a cycle is
// accepted only in the direction with path[1] < path.back(), so each copy is
// reached exactly once.
class CycleWalker {
 public:
  CycleWalker(const ColoredGraph& g, int s, bool rainbow, Budget& budget)
      : g_(g), s_(static_cast<std::size_t>(s)), rainbow_(rainbow), meter_(budget),
        on_path_(g.vertex_count(), 0), closes_(g.vertex_count(), kNoColour),
        side_(rainbow ? g.vertex_count() : 0, -1), dist_(rainbow ? g.vertex_count() : 0, 0) {}

  // Counts cycles anchored at `anchor`; stops at the first one when `visit` returns false.
  template <typename Visit>
  std::uint64_t run(Vertex anchor, Visit&& visit) {
    if (g_.degree(anchor) < 2) return 0;
    anchor_ = anchor;
    for (const Incidence& inc : g_.neighbours(anchor)) closes_[inc.to] = inc.c;
    path_.assign(1, anchor);
    colours_.clear();
    on_path_[anchor] = 1;
    count_ = 0;
    stop_ = false;
    extend(visit);
    on_path_[anchor] = 0;
    for (const Incidence& inc : g_.neighbours(anchor)) closes_[inc.to] = kNoColour;
    return count_;
  }

  std::uint64_t operator()(std::size_t anchor) {
    return run(static_cast<Vertex>(anchor), [](const std::vector<Vertex>&, const std::vector<Colour>&) {
      return true;
    });
  }
  void finish() { meter_.flush(); }

 private:
  static constexpr Colour kNoColour = ~Colour{0};

  // Rainbow pruning: the walk must still return to the anchor in exactly
  // `remaining` steps through fresh vertices and unused colours. Fails when
  // the anchor is unreachable or too far in that subgraph, or when the
  // subgraph is bipartite and the parity of `remaining` is wrong.
  bool can_close(Vertex v, std::size_t remaining) {
    queue_.clear();
    queue_.push_back(anchor_);
    side_[anchor_] = 0;
    dist_[anchor_] = 0;
    bool bipartite = true;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex x = queue_[head];
      if (x == v) continue;
      for (const Incidence& inc : g_.neighbours(x)) {
        const Vertex y = inc.to;
        if (y == anchor_ || (y != v && (y < anchor_ || on_path_[y]))) continue;
        if (contains(colours_, inc.c)) continue;
        if (side_[y] < 0) {
          side_[y] = static_cast<signed char>(side_[x] ^ 1);
          dist_[y] = dist_[x] + 1;
          queue_.push_back(y);
        } else if (side_[y] == side_[x]) {
          bipartite = false;
        }
      }
    }
    const bool reached = side_[v] >= 0;
    bool ok = reached && dist_[v] <= remaining;
    // parity is only forced when no odd cycle was seen anywhere in the component
    if (ok && bipartite) ok = (dist_[v] % 2) == (remaining % 2);
    for (Vertex x : queue_) side_[x] = -1;
    return ok;
  }

  template <typename Visit>
  void extend(Visit& visit) {
    const Vertex v = path_.back();
    const bool last = path_.size() + 1 == s_;
    const std::size_t remaining = s_ - (path_.size() - 1);
    if (rainbow_ && path_.size() > 1 && remaining >= 3 && !can_close(v, remaining)) return;
    for (const Incidence& inc : g_.neighbours(v)) {
      const Vertex w = inc.to;
      if (w <= anchor_ || on_path_[w]) continue;
      if (rainbow_ && contains(colours_, inc.c)) continue;
      meter_.tick();
      if (last) {
        const Colour close = closes_[w];
        if (close == kNoColour || path_[1] > w) continue;
        if (rainbow_ && (close == inc.c || contains(colours_, close))) continue;
        ++count_;
        path_.push_back(w);
        colours_.push_back(inc.c);
        colours_.push_back(close);
        const bool keep_going = visit(path_, colours_);
        colours_.pop_back();
        colours_.pop_back();
        path_.pop_back();
        if (!keep_going) {
          stop_ = true;
          return;
        }
        continue;
      }
      path_.push_back(w);
      colours_.push_back(inc.c);
      on_path_[w] = 1;
      extend(visit);
      on_path_[w] = 0;
      colours_.pop_back();
      path_.pop_back();
      if (stop_) return;
    }
  }

  const ColoredGraph& g_;
  std::size_t s_;
  bool rainbow_;
  Meter meter_;
  std::vector<char> on_path_;
  std::vector<Colour> closes_;
  std::vector<Vertex> path_;
  std::vector<Colour> colours_;
  std::vector<signed char> side_;
  std::vector<std::size_t> dist_;
  std::vector<Vertex> queue_;
  Vertex anchor_ = 0;
  std::uint64_t count_ = 0;
  bool stop_ = false;
};

// Directed simple paths with `l` edges from a start vertex. With
// `only_ascending`, a path is counted only when its end exceeds its start.
class PathWalker {
 public:
  PathWalker(const ColoredGraph& g, int l, bool only_ascending, Budget& budget)
      : g_(g), l_(static_cast<std::size_t>(l)), ascending_(only_ascending), meter_(budget),
        on_path_(g.vertex_count(), 0) {}

  std::uint64_t operator()(std::size_t start) {
    start_ = static_cast<Vertex>(start);
    count_ = 0;
    on_path_[start_] = 1;
    extend(start_, 0);
    on_path_[start_] = 0;
    return count_;
  }
  void finish() { meter_.flush(); }

 private:
  void extend(Vertex v, std::size_t depth) {
    for (const Incidence& inc : g_.neighbours(v)) {
      const Vertex w = inc.to;
      if (on_path_[w]) continue;
      meter_.tick();
      if (depth + 1 == l_) {
        if (!ascending_ || w > start_) ++count_;
        continue;
      }
      on_path_[w] = 1;
      extend(w, depth + 1);
      on_path_[w] = 0;
    }
  }

  const ColoredGraph& g_;
  std::size_t l_;
  bool ascending_;
  Meter meter_;
  std::vector<char> on_path_;
  Vertex start_ = 0;
  std::uint64_t count_ = 0;
};

void require_cycle_length(int s) {
  if (s < 3) throw Error(ErrorKind::InvalidParam, "cycle length must be at least 3");
}

void require_path_length(int l) {
  if (l < 1) throw Error(ErrorKind::InvalidParam, "path length must be at least 1");
}

std::size_t distinct_colours(const ColoredGraph& g) {
  std::vector<Colour> cs;
  cs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) cs.push_back(e.c);
  std::sort(cs.begin(), cs.end());
  return static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

std::uint64_t count_cycles_impl(const ColoredGraph& g, int s, bool rainbow, const SearchOptions& opts) {
  require_cycle_length(s);
  if (static_cast<std::size_t>(s) > g.vertex_count()) return 0;
  if (s % 2 == 1 && g.is_bipartite()) return 0;
  if (rainbow && static_cast<std::size_t>(s) > distinct_colours(g)) return 0;
  Budget budget(opts.budget);
  return parallel_sum(g.vertex_count(), opts.jobs, [&] { return CycleWalker(g, s, rainbow, budget); });
}

}  // namespace

CycleInstance make_cycle(const ColoredGraph& g, std::vector<Vertex> vertices) {
  const std::size_t t = vertices.size();
  if (t < 3) throw Error(ErrorKind::InvalidCycle, "a cycle needs at least 3 vertices");
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidCycle, "cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (!g.adjacent(vertices[i], vertices[(i + 1) % t])) {
      throw Error(ErrorKind::InvalidCycle, "vertices " + std::to_string(vertices[i]) + " and " +
                                               std::to_string(vertices[(i + 1) % t]) + " are not adjacent");
    }
  }
  auto min_it = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), min_it, vertices.end());
  if (vertices[1] > vertices.back()) std::reverse(vertices.begin() + 1, vertices.end());
  CycleInstance out;
  out.colours.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.colours.push_back(*g.colour_between(vertices[i], vertices[(i + 1) % t]));
  out.vertices = std::move(vertices);
  return out;
}

std::uint64_t count_cycles(const ColoredGraph& g, int s, const SearchOptions& opts) {
  return count_cycles_impl(g, s, false, opts);
}

std::uint64_t count_rainbow_cycles(const ColoredGraph& g, int s, const SearchOptions& opts) {
  return count_cycles_impl(g, s, true, opts);
}

std::uint64_t count_paths(const ColoredGraph& g, int l, const SearchOptions& opts) {
  require_path_length(l);
  if (static_cast<std::size_t>(l) + 1 > g.vertex_count()) return 0;
  Budget budget(opts.budget);
  return parallel_sum(g.vertex_count(), opts.jobs, [&] { return PathWalker(g, l, true, budget); });
}

std::uint64_t count_paths_from(const ColoredGraph& g, Vertex a, int l, const SearchOptions& opts) {
  require_path_length(l);
  if (a >= g.vertex_count()) {
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(a) + " out of range");
  }
  Budget budget(opts.budget);
  PathWalker walker(g, l, false, budget);
  const std::uint64_t n = walker(a);
  walker.finish();
  return n;
}

std::uint64_t count_target(const ColoredGraph& g, const Target& target, const SearchOptions& opts) {
  return target.kind == Target::Kind::Cycle ? count_cycles(g, target.length, opts)
                                            : count_paths(g, target.length, opts);
}

std::optional<CycleInstance> find_rainbow_cycle(const ColoredGraph& g, int t, const SearchOptions& opts) {
  require_cycle_length(t);
  if (static_cast<std::size_t>(t) > g.vertex_count()) return std::nullopt;
  if (t % 2 == 1 && g.is_bipartite()) return std::nullopt;
  if (static_cast<std::size_t>(t) > distinct_colours(g)) return std::nullopt;
  Budget budget(opts.budget);
  CycleWalker walker(g, t, true, budget);
  std::optional<CycleInstance> found;
  for (Vertex a = 0; a < g.vertex_count() && !found; ++a) {
    walker.run(a, [&](const std::vector<Vertex>& path, const std::vector<Colour>& colours) {
      found = CycleInstance{path, colours};
      return false;
    });
  }
  walker.finish();
  return found;
}

void for_each_cycle(const ColoredGraph& g, int s, const std::function<void(const CycleInstance&)>& visit,
                    const SearchOptions& opts) {
  require_cycle_length(s);
  if (static_cast<std::size_t>(s) > g.vertex_count()) return;
  Budget budget(opts.budget);
  CycleWalker walker(g, s, false, budget);
  CycleInstance scratch;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    walker.run(a, [&](const std::vector<Vertex>& path, const std::vector<Colour>& colours) {
      scratch.vertices = path;
      scratch.colours = colours;
      visit(scratch);
      return true;
    });
  }
  walker.finish();
}

Pattern pattern_of(const ColoredGraph& g, const CycleInstance& cycle, std::size_t threshold) {
  const std::size_t t = cycle.vertices.size();
  if (cycle.colours.size() != t) throw Error(ErrorKind::InvalidCycle, "colour list length mismatch");
  // make_cycle validates the vertex sequence; compare colours in the given order.
  make_cycle(g, cycle.vertices);
  for (std::size_t i = 0; i < t; ++i) {
    if (*g.colour_between(cycle.vertices[i], cycle.vertices[(i + 1) % t]) != cycle.colours[i]) {
      throw Error(ErrorKind::InvalidCycle, "colour of edge " + std::to_string(i) + " does not match the graph");
    }
  }
  Pattern p;
  for (std::size_t i = 0; i < t; ++i) {
    const PairClass pc = classify_pair(g, cycle.vertices[i], cycle.vertices[(i + 2) % t], threshold);
    if (pc.tag == PairTag::Good) p.good_positions.insert(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (i != j && cycle.colours[i] == cycle.colours[j])
        p.equal_colour_pairs.emplace(static_cast<int>(i), static_cast<int>(j));
  return p;
}

std::uint64_t naive_count(const ColoredGraph& g, const Target& target) {
  const std::size_t n = g.vertex_count();
  const bool cycle = target.kind == Target::Kind::Cycle;
  if (cycle) require_cycle_length(target.length);
  else require_path_length(target.length);
  if (n > (cycle ? 12u : 11u)) {
    throw Error(ErrorKind::BoundExceeded, "naive_count is limited to 12 vertices (cycles) / 11 (paths)");
  }
  const std::size_t size = cycle ? static_cast<std::size_t>(target.length)
                                 : static_cast<std::size_t>(target.length) + 1;
  if (size > n) return 0;

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  std::uint64_t total = 0;
  std::vector<Vertex> order;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
    order.clear();
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) order.push_back(v);
    // `order` starts sorted; for cycles the smallest vertex stays first.
    auto first = cycle ? order.begin() + 1 : order.begin();
    do {
      if (order[cycle ? 1 : 0] > order.back()) continue;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < size && ok; ++i) ok = adj[order[i]][order[i + 1]];
      if (ok && cycle) ok = adj[order.back()][order.front()];
      if (ok) ++total;
    } while (std::next_permutation(first, order.end()));
  }
  return total;
}

}  // namespace rtl
