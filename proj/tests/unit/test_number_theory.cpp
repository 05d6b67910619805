#include <gtest/gtest.h>

#include <set>

#include "rtl/counting.hpp"
#include "rtl/errors.hpp"
#include "rtl/graph.hpp"
#include "rtl/number_theory.hpp"

using namespace rtl;

namespace {

// Reference B_k check that enumerates ordered k-tuples and compares sorted
// index multisets, unlike verify_bk which walks non-decreasing tuples.
bool brute_bk(const std::vector<std::uint64_t>& a, std::uint64_t m, int k) {
  std::map<std::uint64_t, std::multiset<std::size_t>> first_rep;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    std::uint64_t sum = 0;
    for (auto i : idx) sum += a[i];
    sum %= m;
    std::multiset<std::size_t> rep(idx.begin(), idx.end());
    auto [it, inserted] = first_rep.emplace(sum, rep);
    if (!inserted && it->second != rep) return false;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == a.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return true;
}

std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % p;
  return r;
}

}  // namespace

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(48));
  EXPECT_FALSE(is_prime(0));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(9973));
  EXPECT_FALSE(is_prime(9971));  // 13 * 767
}

TEST(FindIrreducible, SmallFields) {
  EXPECT_EQ(find_irreducible(2, 2), (Poly{1, 1, 1}));  // x^2 + x + 1
  const Poly f32 = find_irreducible(3, 2);
  EXPECT_EQ(f32, (Poly{1, 0, 1}));  // x^2 + 1
  for (std::uint64_t x = 0; x < 3; ++x) EXPECT_NE(eval(f32, x, 3), 0u);
  const Poly f23 = find_irreducible(2, 3);
  EXPECT_TRUE(f23 == (Poly{1, 1, 0, 1}) || f23 == (Poly{1, 0, 1, 1}));
  for (std::uint64_t x = 0; x < 2; ++x) EXPECT_NE(eval(f23, x, 2), 0u);
}

TEST(FindIrreducible, RejectsReducibleAndBounds) {
  EXPECT_FALSE(is_irreducible(Poly{1, 0, 1}, 2));     // (x+1)^2 over Z_2
  EXPECT_FALSE(is_irreducible(Poly{1, 0, 1, 0, 1}, 2));  // (x^2+x+1)^2
  EXPECT_TRUE(is_irreducible(Poly{1, 1, 0, 0, 1}, 2));   // x^4 + x + 1
  EXPECT_THROW(find_irreducible(4, 2), Error);
  try {
    find_irreducible(3163, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(ExtField, PrimitiveElementHasFullOrder) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}, {3, 3}, {7, 2}, {2, 5}}) {
    const ExtField f(p, k);
    const std::uint64_t theta = f.primitive_element();
    const std::uint64_t group = f.order() - 1;
    EXPECT_EQ(f.pow(theta, group), 1u);
    std::uint64_t x = theta;
    for (std::uint64_t j = 1; j < group; ++j) {
      ASSERT_NE(x, 1u) << "theta^" << j << " = 1 in GF(" << p << "^" << k << ")";
      x = f.mul(x, theta);
    }
  }
}

TEST(ExtField, MultiplicationIsAssociative) {
  const ExtField f(3, 3);
  for (std::uint64_t a = 0; a < f.order(); a += 5)
    for (std::uint64_t b = 1; b < f.order(); b += 7)
      for (std::uint64_t c = 2; c < f.order(); c += 4)
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
}

TEST(VerifyBk, Examples) {
  const std::vector<std::uint64_t> sidon{0, 1, 3}, not_sidon{0, 1, 2}, single{0};
  EXPECT_TRUE(verify_bk(sidon, 8, 2));
  EXPECT_FALSE(verify_bk(not_sidon, 8, 2));
  EXPECT_TRUE(verify_bk(single, 5, 3));
  EXPECT_TRUE(verify_bk(single, 1, 2));
}

TEST(BoseChowla, FrozenExamples) {
  const BkSet a = bose_chowla(3, 2);
  EXPECT_EQ(a.modulus, 8u);
  EXPECT_EQ(a.elements.size(), 3u);
  EXPECT_TRUE(brute_bk(a.elements, 8, 2));

  const BkSet b = bose_chowla(2, 3);
  EXPECT_EQ(b.modulus, 7u);
  EXPECT_EQ(b.elements.size(), 2u);
  EXPECT_TRUE(brute_bk(b.elements, 7, 3));

  const BkSet c = bose_chowla(5, 2);
  EXPECT_EQ(c.modulus, 24u);
  EXPECT_EQ(c.elements.size(), 5u);
  EXPECT_TRUE(brute_bk(c.elements, 24, 2));
}

TEST(BoseChowla, IsBkForAllSmallParameters) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    for (int k = 2; k <= 6; ++k) {
      double order = 1;
      for (int i = 0; i < k; ++i) order *= q;
      if (order - 1 > 1e5) break;
      const BkSet s = bose_chowla(q, k);
      EXPECT_EQ(s.elements.size(), q) << q << "," << k;
      EXPECT_TRUE(verify_bk(s.elements, s.modulus, k)) << q << "," << k;
      if (s.modulus <= 500) EXPECT_TRUE(brute_bk(s.elements, s.modulus, k)) << q << "," << k;
    }
  }
}

TEST(BoseChowla, Errors) {
  EXPECT_THROW(bose_chowla(4, 2), Error);
  EXPECT_THROW(bose_chowla(3, 1), Error);
  try {
    bose_chowla(101, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(ProjectivePlane, RegularBipartiteAndC4Free) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const auto plane = projective_plane_incidence(q);
    EXPECT_EQ(plane.order, q * q + q + 1);
    EXPECT_EQ(plane.incidences.size(), plane.order * (q + 1));
    std::vector<Edge> edges;
    for (auto [pt, line] : plane.incidences)
      edges.push_back({pt, static_cast<Vertex>(plane.order + line), edges.size()});
    const auto g = ColoredGraph::build(2 * plane.order, edges);
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), q + 1);
    EXPECT_EQ(count_cycles(g, 4), 0u) << q;
    // two points share exactly one line: every same-side pair has one common neighbour
    EXPECT_EQ(common_neighbour_count(g, 0, 1), 1u);
  }
  EXPECT_THROW(projective_plane_incidence(37), Error);
  EXPECT_THROW(projective_plane_incidence(6), Error);
}

TEST(ProjectivePlane, HeawoodGraph) {
  const auto plane = projective_plane_incidence(2);
  std::vector<Edge> edges;
  for (auto [pt, line] : plane.incidences) edges.push_back({pt, static_cast<Vertex>(7 + line), edges.size()});
  const auto g = ColoredGraph::build(14, edges);
  EXPECT_EQ(g.edge_count(), 21u);
  EXPECT_EQ(count_cycles(g, 4), 0u);
  EXPECT_EQ(count_cycles(g, 6), 28u);  // the Heawood graph has 28 hexagons
}
