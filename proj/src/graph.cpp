#include "rtl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "rtl/errors.hpp"

namespace rtl {

namespace {

void check_vertex(const ColoredGraph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range for graph on " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

ColoredGraph ColoredGraph::build(std::size_t vertex_count, std::span<const Edge> edges) {
  ColoredGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorKind::InvalidVertex, "edge (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ") has an endpoint outside [0," +
                                                std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v), e.c});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v) {
      throw Error(ErrorKind::DuplicateEdge, "repeated edge (" + std::to_string(g.edges_[i].u) +
                                                "," + std::to_string(g.edges_[i].v) + ")");
    }
  }

  std::vector<std::size_t> degree(vertex_count, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[vertex_count]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = Incidence{e.v, e.c};
    g.adjacency_[fill[e.v]++] = Incidence{e.u, e.c};
  }

  std::vector<Colour> colours;
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last, [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
    colours.clear();
    for (auto it = first; it != last; ++it) colours.push_back(it->c);
    std::sort(colours.begin(), colours.end());
    auto dup = std::adjacent_find(colours.begin(), colours.end());
    if (dup != colours.end()) {
      throw Error(ErrorKind::ImproperColouring, "colour " + std::to_string(*dup) +
                                                    " appears twice at vertex " + std::to_string(v));
    }
  }
  return g;
}

std::optional<Colour> ColoredGraph::colour_between(Vertex u, Vertex v) const {
  if (u >= vertex_count_ || v >= vertex_count_) return std::nullopt;
  auto nbrs = neighbours(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Incidence& inc, Vertex x) { return inc.to < x; });
  if (it == nbrs.end() || it->to != v) return std::nullopt;
  return it->c;
}

bool ColoredGraph::is_bipartite() const {
  std::vector<int> side(vertex_count_, -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < vertex_count_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (const Incidence& inc : neighbours(v)) {
        if (side[inc.to] == -1) {
          side[inc.to] = 1 - side[v];
          queue.push(inc.to);
        } else if (side[inc.to] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_properly_coloured(const ColoredGraph& g) {
  std::vector<Colour> colours;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    colours.clear();
    for (const Incidence& inc : g.neighbours(v)) colours.push_back(inc.c);
    std::sort(colours.begin(), colours.end());
    if (std::adjacent_find(colours.begin(), colours.end()) != colours.end()) return false;
  }
  return true;
}

std::size_t common_neighbour_count(const ColoredGraph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw Error(ErrorKind::InvalidVertex, "common neighbours need two distinct vertices");
  auto a = g.neighbours(u);
  auto b = g.neighbours(v);
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].to < b[j].to) {
      ++i;
    } else if (b[j].to < a[i].to) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

PairClass classify_pair(const ColoredGraph& g, Vertex u, Vertex v, std::size_t threshold) {
  if (threshold == 0) throw Error(ErrorKind::InvalidParam, "bad-pair threshold must be positive");
  std::size_t common = common_neighbour_count(g, u, v);
  return PairClass{common >= threshold ? PairTag::Bad : PairTag::Good, common, threshold};
}

std::size_t default_bad_threshold(int forbidden_cycle_length) {
  if (forbidden_cycle_length < 3) {
    throw Error(ErrorKind::InvalidParam, "forbidden cycle length must be at least 3");
  }
  return 100 * static_cast<std::size_t>(forbidden_cycle_length / 2);
}

namespace {

bool blank_or_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

template <typename T>
bool parse_fields(std::string_view line, std::span<T> out) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (T& field : out) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto [next, ec] = std::from_chars(p, end, field);
    if (ec != std::errc{} || next == p) return false;
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  return p == end;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

ColoredGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> vertex_count;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    if (!vertex_count) {
      std::size_t n = 0;
      if (!parse_fields(line, std::span<std::size_t>(&n, 1))) parse_error(line_no, "expected vertex count");
      vertex_count = n;
      continue;
    }
    std::uint64_t fields[3];
    if (!parse_fields(line, std::span<std::uint64_t>(fields))) {
      parse_error(line_no, "expected \"u v c\"");
    }
    if (fields[0] >= *vertex_count || fields[1] >= *vertex_count) {
      parse_error(line_no, "vertex id out of range");
    }
    edges.push_back(Edge{static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1]), fields[2]});
  }
  if (!vertex_count) parse_error(line_no + 1, "missing vertex count");
  return ColoredGraph::build(*vertex_count, edges);
}

void write_graph(const ColoredGraph& g, std::ostream& out) {
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.c << '\n';
}

ColoredGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return read_graph(in);
}

void save_graph(const ColoredGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  write_graph(g, out);
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace rtl
