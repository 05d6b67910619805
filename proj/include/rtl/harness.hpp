#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtl/constructions.hpp"
#include "rtl/counting.hpp"
#include "rtl/graph.hpp"
#include "rtl/target.hpp"

namespace rtl {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;  // "2", "5/2"

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Order of magnitude exponent of ex(n, target, rainbow-C_t): the cycle table
// for s >= 4 and the path table for l >= 2 (odd t gives l + 1 for paths).
// Throws OutOfTheoremRange for triangles, single edges, or t < 3.
Rational theorem_exponent(const Target& target, int forbidden);

// A parameter sweep over one construction, e.g. even-cycle-lower with k = 3
// fixed and n in {2, ..., 6}. The control family "star" (parameter m) builds
// K_{1,m} with distinct colours.
struct Family {
  std::string construction;
  std::map<std::string, std::int64_t> fixed;
  std::string sweep_key;
  std::vector<std::int64_t> sweep;
};

ConstructionReport build_family_instance(const Family& family, std::int64_t value);

// 0.05 for families whose counts are an exact power of n, 0.2 otherwise.
double default_tolerance(const std::string& construction);

struct FitPoint {
  std::int64_t parameter = 0;     // sweep value
  std::uint64_t scale = 0;        // size parameter n used on the x axis
  std::uint64_t vertex_count = 0;
  std::uint64_t count = 0;
  bool rainbow_checked = false;   // forbidden lengths verified (vertex_count <= 40)
  bool rainbow_free = true;
};

struct ExponentFit {
  std::vector<FitPoint> points;
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
  Rational expected;
  double tolerance = 0;
  bool within_tolerance = false;
};

// Least squares of log(count) against log(scale). Points with count 0 are
// dropped; fewer than 4 remaining points (or a constant x axis) throws
// InsufficientPoints.
ExponentFit fit_loglog(std::vector<FitPoint> points, Rational expected, double tolerance);

struct ScalingRequest {
  Family family;
  Target target;
  std::optional<int> forbidden;   // for the theorem exponent; default: first listed by the family
  std::optional<Rational> expected;  // overrides theorem_exponent
  std::optional<double> tolerance;   // default_tolerance when empty
};

// Largest instance on which forbidden lengths are verified exhaustively.
inline constexpr std::uint64_t kRainbowCheckVertexLimit = 40;

ExponentFit run_scaling(const ScalingRequest& request, const SearchOptions& opts = {});

struct P2Point {
  std::int64_t parameter = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t max_paths = 0;  // max over a of count_paths_from(a, 2)
  double ratio = 0;             // max_paths / vertex_count
};

struct P2Report {
  std::vector<P2Point> points;
  std::vector<double> growth_per_doubling;  // between consecutive points
  double growth_limit = 0.2;
  bool flagged = false;  // some step grows the ratio by more than growth_limit per doubling
};

// Precondition: no instance contains a rainbow C_{forbidden}; verified
// exhaustively for instances up to kRainbowCheckVertexLimit vertices
// (InvalidParam when violated).
P2Report check_p2_linearity(const Family& family, int forbidden, const SearchOptions& opts = {});

struct ExtremalRecord {
  int n = 0;
  Target target;
  int forbidden = 0;
  std::uint64_t max_count = 0;
  ColoredGraph witness;
  std::uint64_t graphs_examined = 0;
};

// ex(n, target, rainbow-C_forbidden) by brute force over every labelled graph
// on n <= 5 vertices and every proper colouring up to renaming colours.
// Witness: smallest edge mask among maximisers, then the colouring with the
// fewest colours. Throws BoundExceeded for n > 5.
ExtremalRecord exhaustive_extremal(int n, const Target& target, int forbidden, const SearchOptions& opts = {});

// Visits every partition of `edges` into matchings; block[i] is the colour
// class of edge i, classes numbered in order of first appearance.
void for_each_matching_partition(std::span<const std::pair<Vertex, Vertex>> edges,
                                 const std::function<void(const std::vector<int>& block, int blocks)>& visit);

}  // namespace rtl
