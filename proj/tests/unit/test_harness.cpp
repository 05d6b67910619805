#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "rtl/errors.hpp"
#include "rtl/harness.hpp"

using namespace rtl;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an rtl::Error";
  return ErrorKind::IoError;
}

std::vector<FitPoint> power_points(double exponent, std::vector<std::uint64_t> xs) {
  std::vector<FitPoint> pts;
  for (auto x : xs) {
    FitPoint p;
    p.parameter = static_cast<std::int64_t>(x);
    p.scale = x;
    p.vertex_count = 2 * x;
    p.count = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(x), exponent)));
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST(TheoremExponent, CycleTable) {
  EXPECT_EQ(theorem_exponent(Target::cycle(4), 4), Rational::make(2, 1));
  EXPECT_EQ(theorem_exponent(Target::cycle(5), 4), Rational::make(5, 2));
  EXPECT_EQ(theorem_exponent(Target::cycle(6), 6), Rational::make(2, 1));
  EXPECT_EQ(theorem_exponent(Target::cycle(6), 8), Rational::make(3, 1));
  EXPECT_EQ(theorem_exponent(Target::cycle(5), 6), Rational::make(2, 1));
  EXPECT_EQ(theorem_exponent(Target::cycle(5), 5), Rational::make(3, 1));
  EXPECT_EQ(theorem_exponent(Target::cycle(5), 7), Rational::make(3, 1));
  EXPECT_EQ(theorem_exponent(Target::cycle(7), 5), Rational::make(7, 1));
  EXPECT_EQ(theorem_exponent(Target::cycle(6), 5), Rational::make(6, 1));
}

TEST(TheoremExponent, PathTable) {
  EXPECT_EQ(theorem_exponent(Target::path(3), 5), Rational::make(4, 1));
  EXPECT_EQ(theorem_exponent(Target::path(2), 4), Rational::make(2, 1));
  EXPECT_EQ(theorem_exponent(Target::path(3), 4), Rational::make(5, 2));
  EXPECT_EQ(theorem_exponent(Target::path(3), 6), Rational::make(2, 1));
  EXPECT_EQ(theorem_exponent(Target::path(4), 8), Rational::make(3, 1));
  EXPECT_EQ(theorem_exponent(Target::path(2), 6), Rational::make(2, 1));
}

TEST(TheoremExponent, OutOfRange) {
  EXPECT_EQ(kind_of([] { theorem_exponent(Target::cycle(3), 5); }), ErrorKind::OutOfTheoremRange);
  EXPECT_EQ(kind_of([] { theorem_exponent(Target::path(1), 4); }), ErrorKind::OutOfTheoremRange);
  EXPECT_EQ(kind_of([] { theorem_exponent(Target::cycle(4), 2); }), ErrorKind::OutOfTheoremRange);
}

TEST(Rational, Normalises) {
  EXPECT_EQ(Rational::make(4, 2), Rational::make(2, 1));
  EXPECT_EQ(Rational::make(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rational::make(3, 1).to_string(), "3");
  EXPECT_DOUBLE_EQ(Rational::make(5, 2).value(), 2.5);
}

TEST(FitLogLog, ExactPowerLaw) {
  const auto fit = fit_loglog(power_points(2, {2, 3, 4, 5, 6}), Rational::make(2, 1), 0.05);
  EXPECT_NEAR(fit.slope, 2.0, 1e-9);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  EXPECT_TRUE(fit.within_tolerance);
  const auto off = fit_loglog(power_points(3, {2, 4, 8, 16}), Rational::make(2, 1), 0.2);
  EXPECT_NEAR(off.slope, 3.0, 1e-9);
  EXPECT_FALSE(off.within_tolerance);
}

TEST(FitLogLog, InsufficientPoints) {
  EXPECT_EQ(kind_of([] { fit_loglog(power_points(2, {2, 3, 4}), Rational::make(2, 1), 0.1); }),
            ErrorKind::InsufficientPoints);
  auto with_zero = power_points(2, {2, 3, 4, 5});
  with_zero[0].count = 0;
  EXPECT_EQ(kind_of([&] { fit_loglog(with_zero, Rational::make(2, 1), 0.1); }), ErrorKind::InsufficientPoints);
  EXPECT_EQ(kind_of([] { fit_loglog(power_points(2, {3, 3, 3, 3}), Rational::make(2, 1), 0.1); }),
            ErrorKind::InsufficientPoints);
}

TEST(RunScaling, EvenCycleLowerHasSlopeTwo) {
  ScalingRequest req{{"even-cycle-lower", {{"k", 3}}, "n", {2, 3, 4, 5, 6}}, Target::cycle(6), {}, {}, {}};
  const auto fit = run_scaling(req);
  EXPECT_NEAR(fit.slope, 2.0, 1e-9);
  EXPECT_EQ(fit.expected, Rational::make(2, 1));
  EXPECT_DOUBLE_EQ(fit.tolerance, 0.05);
  EXPECT_TRUE(fit.within_tolerance);
  for (const auto& p : fit.points) {
    EXPECT_EQ(p.count, static_cast<std::uint64_t>(p.parameter * p.parameter));
    if (p.rainbow_checked) EXPECT_TRUE(p.rainbow_free);
  }
}

TEST(RunScaling, NeedsFourValues) {
  ScalingRequest req{{"even-cycle-lower", {{"k", 3}}, "n", {2, 3, 4}}, Target::cycle(6), {}, {}, {}};
  EXPECT_EQ(kind_of([&] { run_scaling(req); }), ErrorKind::InsufficientPoints);
}

TEST(P2Linearity, RegularFamilyStaysFlat) {
  const Family f{"c4free-regular-path", {}, "q", {3, 5, 7, 11, 13}};
  const auto rep = check_p2_linearity(f, 4);
  EXPECT_EQ(rep.points.size(), 5u);
  EXPECT_EQ(rep.growth_per_doubling.size(), 4u);
  EXPECT_FALSE(rep.flagged);
  for (const auto& p : rep.points) EXPECT_GT(p.ratio, 0.0);
}

TEST(P2Linearity, DenseBipartiteIsFlagged) {
  // C4 blowup: each vertex has 2n neighbours with 2n - 1 onward steps each,
  // so the ratio grows linearly in n.
  const Family f{"cycle-blowup", {{"s", 4}}, "n", {4, 8, 16, 32}};
  const auto rep = check_p2_linearity(f, 3);
  EXPECT_TRUE(rep.flagged);
}

TEST(P2Linearity, RejectsInstanceWithTheForbiddenRainbowCycle) {
  const Family f{"cycle-blowup", {{"s", 4}}, "n", {2, 3, 4}};
  EXPECT_EQ(kind_of([&] { check_p2_linearity(f, 4); }), ErrorKind::InvalidParam);
}

TEST(MatchingPartitions, CountsForSmallGraphs) {
  const std::vector<std::pair<Vertex, Vertex>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::size_t partitions = 0, three_colour = 0;
  for_each_matching_partition(k4, [&](const std::vector<int>& block, int blocks) {
    ++partitions;
    three_colour += blocks == 3;
    std::set<std::pair<int, Vertex>> seen;
    for (std::size_t i = 0; i < k4.size(); ++i) {
      EXPECT_TRUE(seen.insert({block[i], k4[i].first}).second);
      EXPECT_TRUE(seen.insert({block[i], k4[i].second}).second);
    }
  });
  EXPECT_EQ(partitions, 8u);
  EXPECT_EQ(three_colour, 1u);

  const std::vector<std::pair<Vertex, Vertex>> matching{{0, 1}, {2, 3}};
  std::size_t m = 0;
  for_each_matching_partition(matching, [&](const std::vector<int>&, int) { ++m; });
  EXPECT_EQ(m, 2u);
}

TEST(Extremal, SmallCases) {
  const auto k4 = exhaustive_extremal(4, Target::path(2), 4);
  EXPECT_EQ(k4.max_count, 12u);
  EXPECT_EQ(k4.witness.edge_count(), 6u);
  std::set<Colour> colours;
  for (const Edge& e : k4.witness.edges()) colours.insert(e.c);
  EXPECT_EQ(colours.size(), 3u);

  EXPECT_EQ(exhaustive_extremal(3, Target::path(2), 3).max_count, 1u);
  EXPECT_EQ(exhaustive_extremal(4, Target::cycle(4), 4).max_count, 3u);
  EXPECT_EQ(exhaustive_extremal(4, Target::cycle(3), 4).max_count, 4u);
  EXPECT_EQ(exhaustive_extremal(4, Target::path(3), 4).max_count, 12u);
}

TEST(Extremal, FiveVertices) {
  EXPECT_EQ(exhaustive_extremal(5, Target::cycle(4), 4).max_count, 5u);
  EXPECT_EQ(exhaustive_extremal(5, Target::path(2), 4).max_count, 19u);
  EXPECT_EQ(exhaustive_extremal(5, Target::cycle(5), 4).max_count, 2u);
  EXPECT_EQ(exhaustive_extremal(5, Target::cycle(4), 5).max_count, 15u);
  SearchOptions two;
  two.jobs = 2;
  const auto serial = exhaustive_extremal(5, Target::path(3), 5);
  const auto parallel = exhaustive_extremal(5, Target::path(3), 5, two);
  EXPECT_EQ(serial.max_count, 60u);
  EXPECT_EQ(parallel.max_count, 60u);
  EXPECT_EQ(serial.witness, parallel.witness);
  EXPECT_EQ(kind_of([] { exhaustive_extremal(6, Target::path(2), 4); }), ErrorKind::BoundExceeded);
}
