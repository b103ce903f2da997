#include <gtest/gtest.h>

#include <cmath>
#include <variant>

#include "apollonius/errors.hpp"
#include "apollonius/geom.hpp"
#include "apollonius/locus.hpp"
#include "apollonius/oracle.hpp"
#include "apollonius/sampling.hpp"

using namespace apollonius;

namespace {

template <class G>
double bisect(G g, double lo, double hi) {
  const bool neg_lo = g(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((g(mid) < 0) == neg_lo) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

const Circle kUnit0({0, 0}, 1);
const Circle kUnit1({1, 0}, 1);
const Circle kUnit2({2, 0}, 1);
const Circle kUnit3({3, 0}, 1);
const Circle kUnit4({4, 0}, 1);

}  // namespace

TEST(PowerRatio, Basics) {
  EXPECT_THROW(PowerRatio(0, 0), GeometryError);
  EXPECT_THROW(PowerRatio(NAN, 1), GeometryError);
  EXPECT_TRUE(PowerRatio::infinite().is_infinite());
  EXPECT_EQ(PowerRatio::infinite().value(), INFINITY);
  EXPECT_DOUBLE_EQ(PowerRatio(7, 4).value(), 1.75);
  EXPECT_TRUE(PowerRatio(7, 4).approx_equal(PowerRatio(14, 8)));
  EXPECT_TRUE(PowerRatio(-1, 2).approx_equal(PowerRatio(1, -2)));
  EXPECT_FALSE(PowerRatio(7, 4).approx_equal(PowerRatio(4, 7)));
  EXPECT_TRUE(PowerRatio(7, 4).inverse().approx_equal(PowerRatio(4, 7)));
}

TEST(PowerRatioOfPoint, Examples) {
  EXPECT_TRUE(power_ratio_of_point({2, 2}, kUnit0, kUnit3).approx_equal(PowerRatio(7, 4)));
  const PowerRatio on_c1 = power_ratio_of_point({0, 1}, kUnit0, kUnit3);
  EXPECT_EQ(on_c1.value(), 0.0);
  try {
    power_ratio_of_point({0.5, std::sqrt(3.0) / 2}, kUnit0, kUnit1);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndeterminateRatio);
  }
}

TEST(GeneralizedLocus, RatioTwoMatchesGridOracle) {
  const Locus l = generalized_locus(kUnit0, kUnit3, PowerRatio::of(2));
  ASSERT_EQ(l.kind(), LocusKind::RealCircle);
  EXPECT_NEAR(l.circle().center().x, 6.0, 1e-12);
  EXPECT_NEAR(l.circle().center().y, 0.0, 1e-12);
  EXPECT_NEAR(l.circle().radius(), std::sqrt(19.0), 1e-12);

  const oracle::ScanWindow w{-12, 12, -12, 12, 0.1};
  const auto hits = oracle::grid_scan(kUnit0, kUnit3, PowerRatio::of(2), w);
  ASSERT_GE(hits.size(), 100u);
  const auto fit = oracle::fit_circle(hits);
  EXPECT_NEAR(fit.circle.center().x, 6.0, 1e-4);
  EXPECT_NEAR(fit.circle.center().y, 0.0, 1e-4);
  EXPECT_NEAR(fit.circle.radius(), std::sqrt(19.0), 1e-4);

  const double s = std::sqrt(19.0);
  const Point spot{6 + s, 0};
  EXPECT_NEAR(power(kUnit0, spot), 54 + 12 * s, 1e-10);
  EXPECT_NEAR(power(kUnit0, spot), 2 * power(kUnit3, spot), 1e-10);
}

TEST(GeneralizedLocus, TangentPairNegativeOneIsTheTangencyPoint) {
  const Locus l = generalized_locus(kUnit0, kUnit2, PowerRatio::of(-1));
  ASSERT_EQ(l.kind(), LocusKind::SinglePoint);
  EXPECT_NEAR(l.point().x, 1.0, 1e-12);
  EXPECT_NEAR(l.point().y, 0.0, 1e-12);
}

TEST(GeneralizedLocus, EmptyBetweenThresholds) {
  EXPECT_EQ(generalized_locus(kUnit0, kUnit4, PowerRatio::of(-1)).kind(), LocusKind::Empty);
}

TEST(GeneralizedLocus, ZeroAndInfinityReturnInputs) {
  const Locus zero = generalized_locus(kUnit0, kUnit4, PowerRatio(0, 1));
  ASSERT_TRUE(zero.is_circle());
  EXPECT_EQ(zero.circle(), kUnit0);
  const Locus inf = generalized_locus(kUnit0, kUnit4, PowerRatio::infinite());
  ASSERT_TRUE(inf.is_circle());
  EXPECT_EQ(inf.circle(), kUnit4);
}

TEST(GeneralizedLocus, UnitRatioIsRadicalAxis) {
  const Locus l = generalized_locus(kUnit0, kUnit4, PowerRatio(1, 1));
  ASSERT_EQ(l.kind(), LocusKind::Line);
  EXPECT_NEAR(l.line().normal().x, 1.0, 1e-15);
  EXPECT_NEAR(l.line().offset(), 2.0, 1e-15);
}

TEST(GeneralizedLocus, ConcentricUnitRatio) {
  EXPECT_EQ(generalized_locus(Circle({1, 1}, 2), Circle({1, 1}, 2), PowerRatio(1, 1)).kind(),
            LocusKind::WholePlane);
  EXPECT_EQ(generalized_locus(Circle({1, 1}, 1), Circle({1, 1}, 2), PowerRatio(1, 1)).kind(), LocusKind::Empty);
}

TEST(GeneralizedLocus, ConcentricCirclesGiveConcentricLoci) {
  const Locus l = generalized_locus(Circle({1, 1}, 1), Circle({1, 1}, 2), PowerRatio::of(2));
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(l.circle().center().x, 1.0, 1e-12);
  // P1 = 2 P2 gives |X-O|^2 - 1 = 2|X-O|^2 - 8, so the radius is sqrt(7).
  EXPECT_NEAR(l.circle().radius(), std::sqrt(7.0), 1e-12);
}

TEST(GeneralizedLocus, SwapInvertsRatio) {
  sampling::Rng rng(77);
  for (int n = 0; n < 300; ++n) {
    const auto c = sampling::real_circle_case(rng);
    const Locus a = generalized_locus(c.c1, c.c2, c.k);
    const Locus b = generalized_locus(c.c2, c.c1, c.k.inverse());
    ASSERT_EQ(a.kind(), b.kind());
    const double s = a.circle().radius() + norm(a.circle().center());
    EXPECT_LE(dist(a.circle().center(), b.circle().center()), 1e-9 * s);
    EXPECT_NEAR(a.circle().radius(), b.circle().radius(), 1e-9 * s);
  }
}

TEST(GeneralizedLocus, RigidMotionAndScaling) {
  sampling::Rng rng(78);
  for (int n = 0; n < 300; ++n) {
    const auto c = sampling::real_circle_case(rng);
    const double angle = rng.uniform(0, 6.3), s = rng.uniform(0.2, 5);
    const Point shift = rng.point(10);
    const auto move = [&](Point p) {
      return Point{std::cos(angle) * p.x - std::sin(angle) * p.y, std::sin(angle) * p.x + std::cos(angle) * p.y} *
                 s +
             shift;
    };
    const Locus ref = generalized_locus(c.c1, c.c2, c.k);
    const Locus moved = generalized_locus(Circle(move(c.c1.center()), s * c.c1.radius()),
                                          Circle(move(c.c2.center()), s * c.c2.radius()), c.k);
    ASSERT_EQ(moved.kind(), LocusKind::RealCircle);
    const double scale = s * (ref.circle().radius() + norm(ref.circle().center()) + 1);
    EXPECT_LE(dist(moved.circle().center(), move(ref.circle().center())), 1e-9 * scale);
    EXPECT_NEAR(moved.circle().radius(), s * ref.circle().radius(), 1e-9 * scale);
  }
}

TEST(KThresholds, TwoRootsMatchBisection) {
  const KThresholds th = k_thresholds(kUnit0, kUnit4);
  const auto* two = std::get_if<TwoRoots>(&th);
  ASSERT_NE(two, nullptr);
  const auto g = [](double k) { return k * k + 14 * k + 1; };
  const double lo = bisect(g, -20, -7), hi = bisect(g, -7, 0);
  EXPECT_NEAR(two->k_minus, lo, 1e-12);
  EXPECT_NEAR(two->k_plus, hi, 1e-12);
  EXPECT_NEAR(two->k_minus, -7 - std::sqrt(48.0), 1e-12);
  EXPECT_NEAR(two->k_minus * two->k_plus, 1.0, 1e-12);
}

TEST(KThresholds, TangentAndCrossing) {
  const KThresholds tangent = k_thresholds(kUnit0, kUnit2);
  ASSERT_TRUE(std::holds_alternative<DoubleRoot>(tangent));
  EXPECT_NEAR(std::get<DoubleRoot>(tangent).k, -1.0, 1e-12);
  EXPECT_TRUE(std::holds_alternative<NoRealRoots>(k_thresholds(kUnit0, kUnit1)));
}

TEST(KThresholds, PointCircleIsLinear) {
  // r2 = 0: the quadratic drops to (d^2 - r1^2) k + r1^2 = 0.
  const KThresholds th = k_thresholds(Circle({0, 0}, 1), Circle({3, 0}, 0));
  ASSERT_TRUE(std::holds_alternative<LinearCase>(th));
  EXPECT_NEAR(std::get<LinearCase>(th).k, -1.0 / 8, 1e-12);
  EXPECT_EQ(generalized_locus(Circle({0, 0}, 1), Circle({3, 0}, 0), PowerRatio::of(-1.0 / 8)).kind(),
            LocusKind::SinglePoint);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(kUnit0, kUnit4, PowerRatio::of(-1)), LocusKind::Empty);
  EXPECT_EQ(classify(kUnit0, kUnit4, PowerRatio::of(2)), LocusKind::RealCircle);
  EXPECT_EQ(classify(kUnit0, kUnit4, PowerRatio(1, 1)), LocusKind::Line);

  const oracle::ScanWindow w{-20, 20, -20, 20, 0.1};
  EXPECT_FALSE(oracle::grid_scan(kUnit0, kUnit4, PowerRatio::of(2), w).empty());
  EXPECT_TRUE(oracle::grid_scan(kUnit0, kUnit4, PowerRatio::of(-1), w).empty());
  EXPECT_EQ(to_string(LocusKind::RealCircle), "circle");
  EXPECT_EQ(to_string(LocusKind::WholePlane), "plane");
}

TEST(ApolloniusOfPoint, SevenFourths) {
  const Point a{2, 2};
  const Locus l = apollonius_of_point(a, kUnit0, kUnit3);
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(l.circle().center().x, 7.0, 1e-12);
  EXPECT_NEAR(l.circle().center().y, 0.0, 1e-12);
  EXPECT_NEAR(l.circle().radius(), std::sqrt(29.0), 1e-12);
  EXPECT_NEAR(dist2(a, {7, 0}), 29.0, 1e-12);
  for (int i = 0; i < 32; ++i) {
    const double t = 2 * M_PI * i / 32;
    const Point x = Point{7, 0} + Point{std::cos(t), std::sin(t)} * std::sqrt(29.0);
    EXPECT_NEAR(power(kUnit0, x), 1.75 * power(kUnit3, x), 1e-9 * (1 + std::abs(power(kUnit0, x))));
  }
}

TEST(ApolloniusOfPoint, IntersectingCirclesGiveCircumcircle) {
  const Point a{2, 2};
  const Locus l = apollonius_of_point(a, kUnit0, kUnit1);
  ASSERT_TRUE(l.is_circle());
  const Circle cc = circumcircle({0.5, std::sqrt(3.0) / 2}, a, {0.5, -std::sqrt(3.0) / 2});
  EXPECT_LE(dist(l.circle().center(), cc.center()), 1e-9);
  EXPECT_NEAR(l.circle().radius(), cc.radius(), 1e-9);
}

TEST(ApolloniusOfPoint, PointOnFirstCircle) {
  const Locus l = apollonius_of_point({0, 1}, kUnit0, kUnit3);
  ASSERT_TRUE(l.is_circle());
  EXPECT_EQ(l.circle(), kUnit0);
}

TEST(ApolloniusOfPoint, PassesThroughIntersections) {
  sampling::Rng rng(31);
  for (int n = 0; n < 200; ++n) {
    const auto [c1, c2] = sampling::crossing_pair(rng);
    const auto xs = circle_intersection(c1, c2);
    ASSERT_EQ(xs.size(), 2u);
    const Point a = rng.point(10);
    Locus l;
    try {
      l = apollonius_of_point(a, c1, c2);
    } catch (const GeometryError&) {
      continue;
    }
    if (!l.is_circle()) continue;
    const double s = std::max({c1.radius(), c2.radius(), l.circle().radius(), 1.0});
    for (const Point& x : xs) EXPECT_NEAR(dist(x, l.circle().center()), l.circle().radius(), 1e-8 * s);
    EXPECT_NEAR(dist(a, l.circle().center()), l.circle().radius(), 1e-8 * s);
  }
}

TEST(Locus, RejectsZeroRadiusCircle) {
  EXPECT_THROW(Locus(Circle({0, 0}, 0)), GeometryError);
  EXPECT_EQ(Locus().kind(), LocusKind::Empty);
}
