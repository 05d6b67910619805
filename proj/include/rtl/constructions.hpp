#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rtl/graph.hpp"
#include "rtl/target.hpp"

namespace rtl {

struct PredictedCount {
  Target target;
  std::uint64_t value = 0;
  bool exact = false;  // false: `value` is a lower bound
};

struct ClassTag {
  std::uint32_t class_index;
  std::uint64_t element;
};

struct ConstructionReport {
  std::string construction;
  ColoredGraph graph;
  PredictedCount predicted;
  std::vector<int> forbidden;  // t with no rainbow C_t in `graph`
  std::map<std::string, std::int64_t> params;
  // The linear size parameter n of the family (class size, or the modulus
  // of the underlying cyclic group); vertex_count is Theta(scale).
  std::uint64_t scale = 0;
  std::vector<ClassTag> class_map;  // indexed by vertex
};

// Colour 2 * a + i + 1 for the structured colour (a, i); 0 stays free.
constexpr Colour encode_pair_colour(std::uint64_t a, std::uint64_t i) { return 2 * a + i + 1; }

// Colour of an edge between classes `block` and `block + 1` of a blowup whose
// largest class has `modulus` vertices; x and y are in-class indices.
// Distinct blocks never share colours and colours 0, 1 are never produced.
constexpr Colour block_colour(std::uint64_t block, std::uint64_t x, std::uint64_t y,
                              std::uint64_t modulus) {
  return 2 + block * modulus + (x + y) % modulus;
}

// Four copies of Z_n (n = q^2 - 1) joined along a Sidon set split into two
// halves; n|A1||A2| four-cycles and no rainbow C_4.
ConstructionReport sidon_c4(std::uint32_t q);

// 2k classes around a cycle, X1X2 and X4X5 edges share colour 1; n^(k-1)
// copies of C_2k, none rainbow. k >= 3.
ConstructionReport even_cycle_lower(int k, std::uint64_t n);

// l+1 classes along a path, size n at odd positions, singletons at even ones.
ConstructionReport path_blowup(int l, std::uint64_t n);

// PG(2,q) incidence graph with a proper (q+1)-edge-colouring.
ConstructionReport c4free_regular_path(std::uint32_t q);

// 2l+1 classes of size n around a cycle; X1X2 and X3X4 are identity
// matchings of colour 1, every odd cycle spanning the classes repeats it.
ConstructionReport odd_odd_blowup(int l, std::uint64_t n);

// X1, X2, Y copies of Z_n (n = q^k - 1) built from a B_k set; n|A| triangles.
ConstructionReport triangle_bk(int k, std::uint32_t q);

// Blowup of C_s with classes of size n.
ConstructionReport cycle_blowup(int s, std::uint64_t n);

// Names accepted by `build_construction`, e.g. "sidon-c4", "even-cycle-lower".
const std::vector<std::string>& construction_names();

// Builds a construction by name; `params` holds q, k, l, s, n as needed.
// Throws InvalidParam for unknown names or missing parameters.
ConstructionReport build_construction(const std::string& name,
                                      const std::map<std::string, std::int64_t>& params);

}  // namespace rtl
