#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rtl/graph.hpp"
#include "rtl/target.hpp"

namespace rtl {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// kDefaultBudget unless the RTL_BUDGET environment variable holds a positive integer.
std::uint64_t default_budget();

struct SearchOptions {
  unsigned jobs = 1;                        // 0 = one worker per hardware thread
  std::uint64_t budget = default_budget();  // backtracking nodes per call
};

// A closed walk v_1 .. v_t v_1 through distinct vertices. colours[i] is the
// colour of the edge v_i v_{i+1} (the last one closes the cycle).
// Canonical form: v_1 is the smallest vertex and v_2 < v_t.
struct CycleInstance {
  std::vector<Vertex> vertices;
  std::vector<Colour> colours;

  friend bool operator==(const CycleInstance&, const CycleInstance&) = default;
};

// Validates `vertices` as a cycle of g and returns it in canonical form with
// colours filled in. Throws InvalidCycle.
CycleInstance make_cycle(const ColoredGraph& g, std::vector<Vertex> vertices);

// Unlabelled copies of C_s. Throws BudgetExceeded, InvalidParam for s < 3.
std::uint64_t count_cycles(const ColoredGraph& g, int s, const SearchOptions& opts = {});

// Copies of C_s whose s colours are pairwise distinct.
std::uint64_t count_rainbow_cycles(const ColoredGraph& g, int s, const SearchOptions& opts = {});

// Unlabelled copies of P_l (l edges).
std::uint64_t count_paths(const ColoredGraph& g, int l, const SearchOptions& opts = {});

// Copies of P_l having `a` as an endpoint. Throws InvalidVertex.
std::uint64_t count_paths_from(const ColoredGraph& g, Vertex a, int l, const SearchOptions& opts = {});

std::uint64_t count_target(const ColoredGraph& g, const Target& target, const SearchOptions& opts = {});

// First rainbow C_t in (anchor, lexicographic) search order, canonical form.
std::optional<CycleInstance> find_rainbow_cycle(const ColoredGraph& g, int t, const SearchOptions& opts = {});

// Calls `visit` once per copy of C_s, in canonical form. Single-threaded.
void for_each_cycle(const ColoredGraph& g, int s, const std::function<void(const CycleInstance&)>& visit,
                    const SearchOptions& opts = {});

struct Pattern {
  // i such that (v_i, v_{i+2}) is a good pair, indices mod t, 0-based.
  std::set<int> good_positions;
  // (i, j), i != j, with colour(v_i v_{i+1}) == colour(v_j v_{j+1}); symmetric.
  std::set<std::pair<int, int>> equal_colour_pairs;

  bool rainbow() const { return equal_colour_pairs.empty(); }
};

// Throws InvalidCycle when `cycle` is not a cycle of g with matching colours.
Pattern pattern_of(const ColoredGraph& g, const CycleInstance& cycle, std::size_t threshold);

// Subset-and-ordering enumeration, independent of the backtracking counters.
// Hard limits: 12 vertices for cycles, 11 for paths (BoundExceeded).
std::uint64_t naive_count(const ColoredGraph& g, const Target& target);

}  // namespace rtl
