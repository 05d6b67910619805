#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace rtl {

using Vertex = std::uint32_t;
using Colour = std::uint64_t;

struct Edge {
  Vertex u;
  Vertex v;
  Colour c;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to;
  Colour c;
};

// Simple graph with a proper edge colouring. Instances are only created
// through `build`, which validates the invariants; afterwards the graph is
// immutable and can be shared freely between threads.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Throws Error{SelfLoop | DuplicateEdge | ImproperColouring | InvalidVertex}.
  static ColoredGraph build(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted by (u, v), with u < v.
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Sorted by neighbour id.
  std::span<const Incidence> neighbours(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<Colour> colour_between(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return colour_between(u, v).has_value(); }

  bool is_bipartite() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

// Checks the colouring condition only; `build` already guarantees it, this
// is the standalone predicate used by `verify`.
bool is_properly_coloured(const ColoredGraph& g);

std::size_t common_neighbour_count(const ColoredGraph& g, Vertex u, Vertex v);

enum class PairTag { Good, Bad };

struct PairClass {
  PairTag tag;
  std::size_t common_neighbour_count;
  std::size_t threshold_used;
};

// A pair is bad when it has at least `threshold` common neighbours.
PairClass classify_pair(const ColoredGraph& g, Vertex u, Vertex v, std::size_t threshold);

// 100k for a forbidden cycle of length 2k or 2k+1.
std::size_t default_bad_threshold(int forbidden_cycle_length);

// Colored edge-list text format:
//   line 1: vertex count; then one "u v c" per line; '#' lines are comments.
ColoredGraph read_graph(std::istream& in);
void write_graph(const ColoredGraph& g, std::ostream& out);
ColoredGraph load_graph(const std::filesystem::path& path);
void save_graph(const ColoredGraph& g, const std::filesystem::path& path);

}  // namespace rtl
