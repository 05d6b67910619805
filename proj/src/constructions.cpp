#include "rtl/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "rtl/errors.hpp"
#include "rtl/number_theory.hpp"

namespace rtl {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParam, what);
}

// Layout of a multipartite graph: class i occupies vertices
// [offset[i], offset[i] + size[i]).
struct Classes {
  std::vector<std::uint64_t> size;
  std::vector<std::uint64_t> offset;

  explicit Classes(std::vector<std::uint64_t> sizes) : size(std::move(sizes)), offset(size.size() + 1, 0) {
    std::partial_sum(size.begin(), size.end(), offset.begin() + 1);
  }
  std::uint64_t total() const { return offset.back(); }
  Vertex at(std::size_t cls, std::uint64_t x) const { return static_cast<Vertex>(offset[cls] + x); }

  std::vector<ClassTag> class_map() const {
    std::vector<ClassTag> out;
    out.reserve(total());
    for (std::uint32_t c = 0; c < size.size(); ++c)
      for (std::uint64_t x = 0; x < size[c]; ++x) out.push_back({c, x});
    return out;
  }
};

void guard_vertex_count(std::uint64_t total) {
  if (total > std::uint64_t{1} << 31) throw Error(ErrorKind::BoundExceeded, "construction too large");
}

// Complete bipartite join between classes a and b, coloured with block_colour.
void join_complete(const Classes& cls, std::size_t a, std::size_t b, std::uint64_t block,
                   std::uint64_t modulus, std::vector<Edge>& edges) {
  for (std::uint64_t x = 0; x < cls.size[a]; ++x)
    for (std::uint64_t y = 0; y < cls.size[b]; ++y)
      edges.push_back({cls.at(a, x), cls.at(b, y), block_colour(block, x, y, modulus)});
}

// Proper edge colouring of a bipartite graph with max-degree colours
// (alternating-path recolouring). Edges are processed in the given order and
// the smallest free colour is always preferred.
std::vector<Colour> bipartite_edge_colouring(std::size_t vertex_count,
                                             const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  const std::size_t delta = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  constexpr Vertex kNone = ~Vertex{0};
  // via[v * delta + c] = neighbour of v along colour c
  std::vector<Vertex> via(vertex_count * delta, kNone);
  auto slot = [&](Vertex v, std::size_t c) -> Vertex& { return via[v * delta + c]; };
  auto free_colour = [&](Vertex v) {
    for (std::size_t c = 0; c < delta; ++c)
      if (slot(v, c) == kNone) return c;
    throw Error(ErrorKind::InvalidParam, "no free colour");
  };

  for (auto [u, v] : edges) {
    std::size_t a = free_colour(u);
    if (slot(v, a) != kNone) {
      std::size_t b = free_colour(v);
      // Collect the a/b alternating path from v, then swap its colours.
      std::vector<Vertex> path{v};
      std::size_t c = a;
      while (slot(path.back(), c) != kNone) {
        path.push_back(slot(path.back(), c));
        c = (c == a) ? b : a;
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const std::size_t old = (i % 2 == 0) ? a : b;
        slot(path[i], old) = kNone;
        slot(path[i + 1], old) = kNone;
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const std::size_t swapped = (i % 2 == 0) ? b : a;
        slot(path[i], swapped) = path[i + 1];
        slot(path[i + 1], swapped) = path[i];
      }
    }
    slot(u, a) = v;
    slot(v, a) = u;
  }

  std::vector<Colour> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    for (std::size_t c = 0; c < delta; ++c) {
      if (slot(u, c) == v) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

}  // namespace

ConstructionReport sidon_c4(std::uint32_t q) {
  require(q >= 3, "sidon-c4 needs a prime q >= 3");
  const BkSet sidon = bose_chowla(q, 2);
  const std::uint64_t n = sidon.modulus;
  std::vector<std::uint64_t> a1, a2;
  for (std::size_t i = 0; i < sidon.elements.size(); ++i)
    (i % 2 == 0 ? a1 : a2).push_back(sidon.elements[i]);

  // X00, X01, X10, X11
  const Classes cls({n, n, n, n});
  std::vector<Edge> edges;
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t a : a1) {
      edges.push_back({cls.at(0, x), cls.at(2, (x + a) % n), a});
      edges.push_back({cls.at(1, x), cls.at(3, (x + a) % n), a});
    }
    for (std::uint64_t a : a2) {
      edges.push_back({cls.at(0, x), cls.at(1, (x + a) % n), a});
      edges.push_back({cls.at(2, x), cls.at(3, (x + a) % n), a});
    }
  }

  ConstructionReport r;
  r.construction = "sidon-c4";
  r.graph = ColoredGraph::build(cls.total(), edges);
  r.predicted = {Target::cycle(4), n * a1.size() * a2.size(), true};
  r.forbidden = {4};
  r.params = {{"q", q}, {"n", static_cast<std::int64_t>(n)},
              {"a1", static_cast<std::int64_t>(a1.size())}, {"a2", static_cast<std::int64_t>(a2.size())}};
  r.scale = n;
  r.class_map = cls.class_map();
  return r;
}

ConstructionReport even_cycle_lower(int k, std::uint64_t n) {
  require(k >= 3, "even-cycle-lower needs k >= 3");
  require(n >= 1, "n must be positive");
  const auto classes = static_cast<std::size_t>(2 * k);
  // 0-based: X3 is index 2; X6, X8, ..., X2k are indices 5, 7, ..., 2k-1.
  // For k = 3 the singleton range X7..X2k-1 is empty.
  std::vector<std::uint64_t> sizes(classes, 1);
  sizes[2] = n;
  for (std::size_t i = 5; i < classes; i += 2) sizes[i] = n;
  const Classes cls(sizes);
  guard_vertex_count(cls.total());

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < classes; ++i) {
    const std::size_t j = (i + 1) % classes;
    if (i == 0 || i == 3) {
      edges.push_back({cls.at(i, 0), cls.at(j, 0), 1});
    } else {
      join_complete(cls, i, j, i, n, edges);
    }
  }

  ConstructionReport r;
  r.construction = "even-cycle-lower";
  r.graph = ColoredGraph::build(cls.total(), edges);
  r.predicted = {Target::cycle(2 * k), ipow(n, static_cast<std::uint64_t>(k - 1)), true};
  r.forbidden = {2 * k};
  r.params = {{"k", k}, {"n", static_cast<std::int64_t>(n)}};
  r.scale = n;
  r.class_map = cls.class_map();
  return r;
}

ConstructionReport path_blowup(int l, std::uint64_t n) {
  require(l >= 2, "path-blowup needs l >= 2");
  require(n >= 1, "n must be positive");
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(l) + 1);
  for (std::size_t i = 0; i < sizes.size(); ++i) sizes[i] = (i % 2 == 0) ? n : 1;
  const Classes cls(sizes);
  guard_vertex_count(cls.total());

  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) join_complete(cls, i, i + 1, i, n, edges);

  ConstructionReport r;
  r.construction = "path-blowup";
  r.graph = ColoredGraph::build(cls.total(), edges);
  const auto spanning_exponent = static_cast<std::uint64_t>((l + 2) / 2);  // ceil((l+1)/2)
  r.predicted = {Target::path(l), ipow(n, spanning_exponent), false};
  r.params = {{"l", l}, {"n", static_cast<std::int64_t>(n)}};
  r.scale = n;
  r.class_map = cls.class_map();
  return r;
}

ConstructionReport c4free_regular_path(std::uint32_t q) {
  const IncidenceStructure plane = projective_plane_incidence(q);
  const std::size_t half = plane.order;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(plane.incidences.size());
  for (auto [point, line] : plane.incidences)
    pairs.emplace_back(static_cast<Vertex>(point), static_cast<Vertex>(half + line));
  const std::vector<Colour> colours = bipartite_edge_colouring(2 * half, pairs);

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) edges.push_back({pairs[i].first, pairs[i].second, colours[i]});

  ConstructionReport r;
  r.construction = "c4free-regular-path";
  r.graph = ColoredGraph::build(2 * half, edges);
  const std::uint64_t d = q + 1;
  r.predicted = {Target::path(2), 2 * half * d * (d - 1) / 2, true};
  r.forbidden = {4};
  r.params = {{"q", q}};
  r.scale = half;
  r.class_map.reserve(2 * half);
  for (std::uint32_t side = 0; side < 2; ++side)
    for (std::uint64_t x = 0; x < half; ++x) r.class_map.push_back({side, x});
  return r;
}

ConstructionReport odd_odd_blowup(int l, std::uint64_t n) {
  require(l >= 2, "odd-odd-blowup needs l >= 2");
  require(n >= 1, "n must be positive");
  const auto classes = static_cast<std::size_t>(2 * l + 1);
  const Classes cls(std::vector<std::uint64_t>(classes, n));
  guard_vertex_count(cls.total());

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < classes; ++i) {
    const std::size_t j = (i + 1) % classes;
    if (i == 0 || i == 2) {
      for (std::uint64_t x = 0; x < n; ++x) edges.push_back({cls.at(i, x), cls.at(j, x), 1});
    } else {
      join_complete(cls, i, j, i, n, edges);
    }
  }

  ConstructionReport r;
  r.construction = "odd-odd-blowup";
  r.graph = ColoredGraph::build(cls.total(), edges);
  r.predicted = {Target::cycle(2 * l + 1), ipow(n, static_cast<std::uint64_t>(2 * l - 1)), true};
  // Every odd cycle must cross both colour-1 matchings; odd lengths above
  // the vertex count cannot occur at all.
  for (std::uint64_t t = static_cast<std::uint64_t>(2 * l + 1); t <= cls.total(); t += 2)
    r.forbidden.push_back(static_cast<int>(t));
  r.params = {{"l", l}, {"n", static_cast<std::int64_t>(n)}};
  r.scale = n;
  r.class_map = cls.class_map();
  return r;
}

ConstructionReport triangle_bk(int k, std::uint32_t q) {
  require(k >= 2, "triangle-bk needs k >= 2");
  if (!is_prime(q)) throw Error(ErrorKind::InvalidParam, std::to_string(q) + " is not prime");
  std::uint64_t order = 1;
  for (int i = 0; i < k; ++i) {
    order *= q;
    if (order - 1 > 100'000) throw Error(ErrorKind::BoundExceeded, "triangle-bk limited to q^k - 1 <= 100000");
  }
  const BkSet bk = bose_chowla(q, k);
  const std::uint64_t n = bk.modulus;
  const Classes cls({n, n, n});  // X1, X2, Y

  std::vector<Edge> edges;
  for (std::uint64_t x = 0; x < n; ++x) {
    edges.push_back({cls.at(0, x), cls.at(1, x), 0});
    for (std::uint64_t a : bk.elements) {
      edges.push_back({cls.at(0, x), cls.at(2, (x + a) % n), encode_pair_colour(a, 1)});
      edges.push_back({cls.at(1, x), cls.at(2, (x + a) % n), encode_pair_colour(a, 2)});
    }
  }

  ConstructionReport r;
  r.construction = "triangle-bk";
  r.graph = ColoredGraph::build(cls.total(), edges);
  r.predicted = {Target::cycle(3), n * bk.elements.size(), true};
  r.forbidden = {k % 2 == 1 ? 2 * k : 2 * k + 1};
  r.params = {{"k", k}, {"q", q}, {"n", static_cast<std::int64_t>(n)}};
  r.scale = n;
  r.class_map = cls.class_map();
  return r;
}

ConstructionReport cycle_blowup(int s, std::uint64_t n) {
  require(s >= 3, "cycle-blowup needs s >= 3");
  require(n >= 1, "n must be positive");
  const auto classes = static_cast<std::size_t>(s);
  const Classes cls(std::vector<std::uint64_t>(classes, n));
  guard_vertex_count(cls.total());

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < classes; ++i) join_complete(cls, i, (i + 1) % classes, i, n, edges);

  ConstructionReport r;
  r.construction = "cycle-blowup";
  r.graph = ColoredGraph::build(cls.total(), edges);
  r.predicted = {Target::cycle(s), ipow(n, static_cast<std::uint64_t>(s)), false};
  // Odd girth is s for odd s; for even s the graph is bipartite.
  const std::uint64_t limit = (s % 2 == 1) ? static_cast<std::uint64_t>(s) - 1 : cls.total();
  for (std::uint64_t t = 3; t <= limit; t += 2) r.forbidden.push_back(static_cast<int>(t));
  r.params = {{"s", s}, {"n", static_cast<std::int64_t>(n)}};
  r.scale = n;
  r.class_map = cls.class_map();
  return r;
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {"sidon-c4",       "even-cycle-lower", "path-blowup",
                                                 "c4free-regular-path", "odd-odd-blowup", "triangle-bk",
                                                 "cycle-blowup"};
  return names;
}

ConstructionReport build_construction(const std::string& name,
                                      const std::map<std::string, std::int64_t>& params) {
  auto get = [&](const char* key) -> std::int64_t {
    auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorKind::InvalidParam, name + " requires --" + key);
    if (it->second < 0) throw Error(ErrorKind::InvalidParam, std::string(key) + " must be non-negative");
    return it->second;
  };
  auto as_u32 = [](std::int64_t v) {
    if (v > 0xFFFFFFFFLL) throw Error(ErrorKind::BoundExceeded, "parameter too large");
    return static_cast<std::uint32_t>(v);
  };
  auto as_int = [](std::int64_t v) {
    if (v > 1'000'000) throw Error(ErrorKind::BoundExceeded, "parameter too large");
    return static_cast<int>(v);
  };
  auto as_n = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };

  if (name == "sidon-c4") return sidon_c4(as_u32(get("q")));
  if (name == "even-cycle-lower") return even_cycle_lower(as_int(get("k")), as_n(get("n")));
  if (name == "path-blowup") return path_blowup(as_int(get("l")), as_n(get("n")));
  if (name == "c4free-regular-path") return c4free_regular_path(as_u32(get("q")));
  if (name == "odd-odd-blowup") return odd_odd_blowup(as_int(get("l")), as_n(get("n")));
  if (name == "triangle-bk") return triangle_bk(as_int(get("k")), as_u32(get("q")));
  if (name == "cycle-blowup") return cycle_blowup(as_int(get("s")), as_n(get("n")));
  throw Error(ErrorKind::InvalidParam, "unknown construction '" + name + "'");
}

}  // namespace rtl
