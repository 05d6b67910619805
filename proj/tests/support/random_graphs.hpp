#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rtl/graph.hpp"

namespace rtl::fixtures {

// G(n, p) with a proper colouring built greedily: edges are visited in a
// shuffled order and take the smallest colour free at both ends, so every
// colour class is a matching.
inline ColoredGraph random_coloured_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (keep(rng)) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<std::vector<Colour>> used(n);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    Colour c = 0;
    while (std::count(used[u].begin(), used[u].end(), c) || std::count(used[v].begin(), used[v].end(), c)) ++c;
    used[u].push_back(c);
    used[v].push_back(c);
    edges.push_back({u, v, c});
  }
  return ColoredGraph::build(n, edges);
}

inline ColoredGraph complete_graph(std::size_t n) {
  // Colour (u + v) mod n' with n' odd is proper; use n' = n | 1.
  const std::size_t m = n | 1;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, (u + v) % m});
  return ColoredGraph::build(n, edges);
}

inline ColoredGraph cycle_graph(std::size_t n, bool rainbow = true) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    const Colour c = rainbow ? i : i % 2;
    edges.push_back({i, static_cast<Vertex>((i + 1) % n), c});
  }
  return ColoredGraph::build(n, edges);
}

}  // namespace rtl::fixtures
