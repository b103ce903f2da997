#include <gtest/gtest.h>

#include <cmath>

#include "apollonius/classic.hpp"
#include "apollonius/errors.hpp"
#include "apollonius/geom.hpp"
#include "apollonius/sampling.hpp"

using namespace apollonius;

namespace {

const Point kA{0, 3}, kB{0, 0}, kC{4, 0};

template <class G>
double bisect(G g, double lo, double hi) {
  const bool neg_lo = g(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((g(mid) < 0) == neg_lo) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Points of line bc at parameter t with |X-b| = lambda |X-c|, found by bisection
// inside and outside the segment.
struct Feet {
  double inner, outer;
};
Feet feet_on_x_axis(double c, double lambda) {
  const auto g = [&](double x) { return std::abs(x) - lambda * std::abs(x - c); };
  const double inner = bisect(g, 0, c);
  const double outer = lambda > 1 ? bisect(g, c, 100 * c) : bisect(g, -100 * c, 0);
  return {inner, outer};
}

template <class F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    FAIL() << "expected " << describe(code);
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(ClassicRatioLocus, RatioTwo) {
  const Feet f = feet_on_x_axis(4, 2);
  EXPECT_NEAR(f.inner, 8.0 / 3, 1e-12);
  EXPECT_NEAR(f.outer, 8.0, 1e-12);
  const Locus l = classic_ratio_locus(kB, kC, 2);
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(l.circle().center().x, 0.5 * (f.inner + f.outer), 1e-12);
  EXPECT_NEAR(l.circle().center().x, 16.0 / 3, 1e-12);
  EXPECT_NEAR(l.circle().radius(), 8.0 / 3, 1e-12);
}

TEST(ClassicRatioLocus, RatioHalf) {
  const Feet f = feet_on_x_axis(4, 0.5);
  EXPECT_NEAR(f.inner, 4.0 / 3, 1e-12);
  EXPECT_NEAR(f.outer, -4.0, 1e-12);
  const Locus l = classic_ratio_locus(kB, kC, 0.5);
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(l.circle().center().x, -4.0 / 3, 1e-12);
  EXPECT_NEAR(l.circle().radius(), 8.0 / 3, 1e-12);
}

TEST(ClassicRatioLocus, UnitRatioAndErrors) {
  const Locus l = classic_ratio_locus(kB, kC, 1);
  ASSERT_EQ(l.kind(), LocusKind::Line);
  EXPECT_NEAR(l.line().offset(), 2.0, 1e-15);
  expect_code(ErrorCode::CoincidentPoints, [] { classic_ratio_locus(kB, kB, 2); });
  expect_code(ErrorCode::NonpositiveRatio, [] { classic_ratio_locus(kB, kC, 0); });
  expect_code(ErrorCode::NonpositiveRatio, [] { classic_ratio_locus(kB, kC, -1); });
}

TEST(ClassicApollonius, ThreeFourFive) {
  const ClassicApollonius k = classic_apollonius(kA, kB, kC);
  ASSERT_TRUE(k.locus.is_circle());
  const Feet f = feet_on_x_axis(4, 3.0 / 5);
  EXPECT_NEAR(f.inner, 1.5, 1e-12);
  EXPECT_NEAR(f.outer, -6.0, 1e-12);
  EXPECT_NEAR(k.center->x, 0.5 * (f.inner + f.outer), 1e-12);
  EXPECT_NEAR(k.center->x, -2.25, 1e-12);
  EXPECT_NEAR(k.center->y, 0.0, 1e-12);
  EXPECT_NEAR(*k.radius, 3.75, 1e-12);
  EXPECT_NEAR(dist(kA, *k.center), 3.75, 1e-12);
}

TEST(ClassicApollonius, IsoscelesIsBisector) {
  const ClassicApollonius k = classic_apollonius({2, 5}, kB, kC);
  ASSERT_EQ(k.locus.kind(), LocusKind::Line);
  EXPECT_FALSE(k.center.has_value());
  EXPECT_NEAR(k.locus.line().offset(), 2.0, 1e-15);
  expect_code(ErrorCode::CoincidentPoints, [] { classic_apollonius(kA, kA, kC); });
}

TEST(ClassicApollonius, MatchesPointCircleReduction) {
  const ClassicApollonius k = classic_apollonius(kA, kB, kC);
  const Locus l = apollonius_of_point(kA, Circle(kB, 0), Circle(kC, 0));
  ASSERT_TRUE(l.is_circle());
  EXPECT_NEAR(l.circle().center().x, k.center->x, 1e-12 * 3.75);
  EXPECT_NEAR(l.circle().center().y, k.center->y, 1e-12 * 3.75);
  EXPECT_NEAR(l.circle().radius(), *k.radius, 1e-12 * 3.75);
}

TEST(BisectorFeet, Examples) {
  const BisectorFeet f = bisector_feet(kA, kB, kC);
  EXPECT_NEAR(f.internal.x, 1.5, 1e-12);
  EXPECT_NEAR(f.external.x, -6.0, 1e-12);
  EXPECT_NEAR(f.internal.y, 0.0, 1e-12);
  const Point mid = (f.internal + f.external) * 0.5;
  EXPECT_NEAR(mid.x, -2.25, 1e-12);
  expect_code(ErrorCode::IsoscelesDegenerate, [] { bisector_feet({3, 4}, {0, 0}, {6, 0}); });
  expect_code(ErrorCode::CollinearABC, [] { bisector_feet({-1, 0}, {0, 0}, {4, 0}); });
}

TEST(LemoineData, ThreeFourFive) {
  const LemoineData d = lemoine_data(kA, kB, kC);
  EXPECT_NEAR(d.m_a.x, -2.25, 1e-12);
  EXPECT_NEAR(d.m_a.y, 0.0, 1e-12);
  EXPECT_NEAR(d.m_b.x, -36.0 / 7, 1e-12);
  EXPECT_NEAR(d.m_b.y, 48.0 / 7, 1e-12);
  EXPECT_NEAR(d.m_c.x, 0.0, 1e-12);
  EXPECT_NEAR(d.m_c.y, -16.0 / 3, 1e-12);
  EXPECT_TRUE(collinear(d.m_a, d.m_b, d.m_c));
  EXPECT_NEAR(d.o.x, 2.0, 1e-12);
  EXPECT_NEAR(d.o.y, 1.5, 1e-12);
  EXPECT_LE(point_line_distance(d.lemoine, d.m_c), 1e-9);

  // The three circles from the independent midpoint construction.
  const Circle ka = classic_apollonius(kA, kB, kC).locus.circle();
  const Circle kb = classic_apollonius(kB, kC, kA).locus.circle();
  const Circle kc = classic_apollonius(kC, kA, kB).locus.circle();
  for (const Point& s : {d.s1, d.s2}) {
    for (const Circle& k : {ka, kb, kc}) EXPECT_LE(std::abs(power(k, s)), 1e-9 * 100);
  }
  EXPECT_TRUE(y_then_x_less(d.s1, d.s2));
  EXPECT_TRUE(collinear(d.o, d.s1, d.s2));
}

TEST(LemoineData, Errors) {
  expect_code(ErrorCode::DegenerateTriangle, [] { lemoine_data({0, 0}, {1, 1}, {2, 2}); });
  expect_code(ErrorCode::NotScalene, [] { lemoine_data({3, 4}, {0, 0}, {6, 0}); });
}

TEST(ClassicTheorems, RandomScalene) {
  sampling::Rng rng(404);
  for (int n = 0; n < 200; ++n) {
    const auto [a, b, c] = sampling::scalene_triangle(rng);
    const double s = std::max({dist(a, b), dist(b, c), dist(c, a)});
    const ClassicApollonius ka = classic_apollonius(a, b, c);
    const Circle& k = ka.locus.circle();
    const BisectorFeet f = bisector_feet(a, b, c);
    EXPECT_LE(std::abs(power(k, f.internal)), 1e-9 * s * s);
    EXPECT_LE(std::abs(power(k, f.external)), 1e-9 * s * s);
    // AO is tangent to K_A, so the power of O equals |AO|^2.
    const Point o = circumcircle(a, b, c).center();
    EXPECT_LE(std::abs(power(k, o) - dist2(a, o)), 1e-9 * s * s);
    const LemoineData d = lemoine_data(a, b, c);
    EXPECT_TRUE(collinear(d.m_a, d.m_b, d.m_c, Tolerance::uniform(1e-8)));
  }
}
