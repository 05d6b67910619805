#include "rtl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "rtl/errors.hpp"

namespace rtl {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidParam, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational theorem_exponent(const Target& target, int t) {
  if (t < 3) throw Error(ErrorKind::OutOfTheoremRange, "forbidden cycle length must be at least 3");
  const bool t_even = t % 2 == 0;

  if (target.kind == Target::Kind::Path) {
    const int l = target.length;
    if (l < 2) throw Error(ErrorKind::OutOfTheoremRange, "the order of magnitude for single edges is open");
    if (!t_even) return Rational::make(l + 1, 1);
    if (t == 4) return Rational::make(l + 2, 2);  // l/2 + 1
    return Rational::make((l + 2) / 2, 1);        // ceil((l+1)/2)
  }

  const int s = target.length;
  if (s < 4) throw Error(ErrorKind::OutOfTheoremRange, "triangle counts have no matching bounds");
  const bool s_even = s % 2 == 0;
  if (t == 4) return Rational::make(s, 2);
  if (s_even && t_even && s != t) return Rational::make(s, 2);
  if (s == t && t_even) return Rational::make(s - 2, 2);
  if (t_even && !s_even) return Rational::make(s - 1, 2);
  if (!s_even && !t_even && s <= t) return Rational::make(s - 2, 1);
  return Rational::make(s, 1);  // t odd, and s > t or s even
}

ConstructionReport build_family_instance(const Family& family, std::int64_t value) {
  if (family.construction == "star") {
    if (value < 1) throw Error(ErrorKind::InvalidParam, "star needs m >= 1");
    const auto m = static_cast<std::uint64_t>(value);
    std::vector<Edge> edges;
    for (std::uint64_t i = 1; i <= m; ++i) edges.push_back({0, static_cast<Vertex>(i), i});
    ConstructionReport r;
    r.construction = "star";
    r.graph = ColoredGraph::build(m + 1, edges);
    r.predicted = {Target::path(2), m * (m - 1) / 2, true};
    r.params = {{"m", value}};
    r.scale = m;
    r.class_map.push_back({0, 0});
    for (std::uint64_t i = 0; i < m; ++i) r.class_map.push_back({1, i});
    return r;
  }
  auto params = family.fixed;
  params[family.sweep_key] = value;
  return build_construction(family.construction, params);
}

double default_tolerance(const std::string& construction) {
  return (construction == "even-cycle-lower" || construction == "odd-odd-blowup") ? 0.05 : 0.2;
}

ExponentFit fit_loglog(std::vector<FitPoint> points, Rational expected, double tolerance) {
  std::erase_if(points, [](const FitPoint& p) { return p.count == 0 || p.scale == 0; });
  if (points.size() < 4) {
    throw Error(ErrorKind::InsufficientPoints,
                "need at least 4 points with non-zero counts, have " + std::to_string(points.size()));
  }
  const double m = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& p : points) {
    sx += std::log(static_cast<double>(p.scale));
    sy += std::log(static_cast<double>(p.count));
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& p : points) {
    const double dx = std::log(static_cast<double>(p.scale)) - mx;
    const double dy = std::log(static_cast<double>(p.count)) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0) throw Error(ErrorKind::InsufficientPoints, "all points share the same size");

  ExponentFit fit;
  fit.points = std::move(points);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double ss_res = std::max(0.0, syy - fit.slope * sxy);
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  fit.expected = expected;
  fit.tolerance = tolerance;
  fit.within_tolerance = std::abs(fit.slope - expected.value()) <= tolerance;
  return fit;
}

ExponentFit run_scaling(const ScalingRequest& request, const SearchOptions& opts) {
  if (request.family.sweep.size() < 4) {
    throw Error(ErrorKind::InsufficientPoints, "a scaling run needs at least 4 parameter values");
  }
  std::vector<FitPoint> points;
  std::optional<int> forbidden = request.forbidden;
  for (std::int64_t value : request.family.sweep) {
    const ConstructionReport rep = build_family_instance(request.family, value);
    FitPoint pt;
    pt.parameter = value;
    pt.scale = rep.scale;
    pt.vertex_count = rep.graph.vertex_count();
    pt.count = count_target(rep.graph, request.target, opts);
    if (pt.vertex_count <= kRainbowCheckVertexLimit && !rep.forbidden.empty()) {
      pt.rainbow_checked = true;
      for (int t : rep.forbidden) {
        if (find_rainbow_cycle(rep.graph, t, opts)) {
          pt.rainbow_free = false;
          break;
        }
      }
    }
    if (!forbidden && !rep.forbidden.empty()) forbidden = rep.forbidden.front();
    points.push_back(pt);
  }

  Rational expected;
  if (request.expected) {
    expected = *request.expected;
  } else {
    if (!forbidden) {
      throw Error(ErrorKind::InvalidParam, "family lists no forbidden length; pass one explicitly");
    }
    expected = theorem_exponent(request.target, *forbidden);
  }
  const double tol = request.tolerance.value_or(default_tolerance(request.family.construction));
  return fit_loglog(std::move(points), expected, tol);
}

P2Report check_p2_linearity(const Family& family, int forbidden, const SearchOptions& opts) {
  P2Report report;
  for (std::int64_t value : family.sweep) {
    const ConstructionReport rep = build_family_instance(family, value);
    const ColoredGraph& g = rep.graph;
    if (g.vertex_count() <= kRainbowCheckVertexLimit && find_rainbow_cycle(g, forbidden, opts)) {
      throw Error(ErrorKind::InvalidParam, family.construction + " instance " + std::to_string(value) +
                                               " contains a rainbow C" + std::to_string(forbidden));
    }
    P2Point pt;
    pt.parameter = value;
    pt.vertex_count = g.vertex_count();
    for (Vertex a = 0; a < g.vertex_count(); ++a) pt.max_paths = std::max(pt.max_paths, count_paths_from(g, a, 2, opts));
    pt.ratio = pt.vertex_count ? static_cast<double>(pt.max_paths) / static_cast<double>(pt.vertex_count) : 0.0;
    report.points.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < report.points.size(); ++i) {
    const P2Point& a = report.points[i];
    const P2Point& b = report.points[i + 1];
    if (b.vertex_count <= a.vertex_count) {
      throw Error(ErrorKind::InvalidParam, "p2 check needs strictly increasing instance sizes");
    }
    const double doublings = std::log2(static_cast<double>(b.vertex_count) / static_cast<double>(a.vertex_count));
    double growth;
    if (a.ratio == 0) growth = b.ratio == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    else growth = std::pow(b.ratio / a.ratio, 1.0 / doublings) - 1.0;
    report.growth_per_doubling.push_back(growth);
    if (growth > report.growth_limit) report.flagged = true;
  }
  return report;
}

void for_each_matching_partition(std::span<const std::pair<Vertex, Vertex>> edges,
                                 const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> block(edges.size(), -1);
  std::vector<std::uint64_t> used;  // vertex mask per block
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      visit(block, static_cast<int>(used.size()));
      return;
    }
    const std::uint64_t ends = (std::uint64_t{1} << edges[i].first) | (std::uint64_t{1} << edges[i].second);
    for (std::size_t b = 0; b < used.size(); ++b) {
      if (used[b] & ends) continue;
      used[b] |= ends;
      block[i] = static_cast<int>(b);
      self(self, i + 1);
      used[b] &= ~ends;
    }
    used.push_back(ends);
    block[i] = static_cast<int>(used.size() - 1);
    self(self, i + 1);
    used.pop_back();
  };
  rec(rec, 0);
}

namespace {

struct GraphResult {
  bool valid = false;
  std::uint64_t count = 0;
  std::uint32_t mask = 0;
  std::vector<int> colouring;
};

bool better(const GraphResult& a, const GraphResult& b) {
  if (a.valid != b.valid) return a.valid;
  if (a.count != b.count) return a.count > b.count;
  return a.mask < b.mask;
}

ColoredGraph colour_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, const std::vector<int>& colouring) {
  std::vector<Edge> coloured;
  for (std::size_t i = 0; i < edges.size(); ++i)
    coloured.push_back({edges[i].first, edges[i].second, static_cast<Colour>(colouring[i])});
  return ColoredGraph::build(static_cast<std::size_t>(n), coloured);
}

}  // namespace

ExtremalRecord exhaustive_extremal(int n, const Target& target, int forbidden, const SearchOptions& opts) {
  if (n < 1 || n > 5) throw Error(ErrorKind::BoundExceeded, "exhaustive search is limited to 1 <= n <= 5");
  if (forbidden < 3) throw Error(ErrorKind::InvalidParam, "forbidden cycle length must be at least 3");

  std::vector<std::pair<Vertex, Vertex>> all_pairs;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) all_pairs.emplace_back(u, v);
  const std::uint32_t graph_count = 1u << all_pairs.size();

  // Best proper colouring without a rainbow C_forbidden for one labelled graph.
  auto solve = [&](std::uint32_t mask, const GraphResult& incumbent) -> GraphResult {
    GraphResult res;
    res.mask = mask;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < all_pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(all_pairs[i]);
    // The count of the target does not depend on the colouring; use any proper one.
    std::vector<Edge> distinct;
    for (std::size_t i = 0; i < edges.size(); ++i) distinct.push_back({edges[i].first, edges[i].second, i});
    res.count = count_target(ColoredGraph::build(static_cast<std::size_t>(n), distinct), target, opts);
    if (incumbent.valid && res.count < incumbent.count) return res;
    int best_blocks = std::numeric_limits<int>::max();
    for_each_matching_partition(edges, [&](const std::vector<int>& block, int blocks) {
      if (blocks >= best_blocks) return;
      if (find_rainbow_cycle(colour_graph(n, edges, block), forbidden, opts)) return;
      best_blocks = blocks;
      res.valid = true;
      res.colouring = block;
    });
    return res;
  };

  const unsigned jobs = std::max(1u, opts.jobs == 0 ? std::thread::hardware_concurrency() : opts.jobs);
  std::vector<GraphResult> best(jobs);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](unsigned w) {
    try {
      for (std::uint32_t mask = w; mask < graph_count; mask += jobs) {
        GraphResult r = solve(mask, best[w]);
        if (better(r, best[w])) best[w] = std::move(r);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  GraphResult winner = *std::min_element(best.begin(), best.end(),
                                         [](const GraphResult& a, const GraphResult& b) { return better(a, b); });
  ExtremalRecord rec;
  rec.n = n;
  rec.target = target;
  rec.forbidden = forbidden;
  rec.graphs_examined = graph_count;
  if (!winner.valid) {
    // The empty graph always qualifies, so this only happens on an internal error.
    throw Error(ErrorKind::InvalidParam, "no admissible graph found");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < all_pairs.size(); ++i)
    if (winner.mask >> i & 1) edges.push_back(all_pairs[i]);
  rec.max_count = winner.count;
  rec.witness = colour_graph(n, edges, winner.colouring);
  return rec;
}

}  // namespace rtl
