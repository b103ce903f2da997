#include "apollonius/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "apollonius/errors.hpp"
#include "apollonius/power.hpp"

namespace apollonius::sampling {

namespace {

constexpr double kExtent = 10.0;

PowerRatio random_ratio(Rng& rng) {
  // Mostly finite k in [-10, 10]; occasionally a ratio near 0 or infinity.
  const double pick = rng.uniform(0.0, 1.0);
  if (pick < 0.8) return PowerRatio::of(rng.uniform(-10.0, 10.0));
  if (pick < 0.9) return PowerRatio(rng.uniform(-1.0, 1.0), rng.uniform(-0.05, 0.05));
  return PowerRatio(rng.uniform(-0.05, 0.05), rng.uniform(-1.0, 1.0));
}

Circle random_circle(Rng& rng, double r_max) {
  // One in ten is a point-circle.
  const double r = rng.uniform(0.0, 1.0) < 0.1 ? 0.0 : rng.uniform(0.0, r_max);
  return Circle(rng.point(kExtent), r);
}

bool proper_triangle(Point a, Point b, Point c) {
  const double longest2 = std::max({dist2(a, b), dist2(b, c), dist2(c, a)});
  return longest2 > 0.0 && std::abs(cross(b - a, c - a)) >= 0.1 * longest2;
}

// Powers bounded away from zero and from each other, relative to the triple's scale.
bool well_conditioned(const CircleTriple& t) {
  const double s2 = t.scale() * t.scale();
  for (int i = 0; i < 3; ++i) {
    const double p = power(t.circle(i + 1), t.center(i));
    const double q = power(t.circle(i + 2), t.center(i));
    if (std::abs(p) < 0.02 * s2 || std::abs(q) < 0.02 * s2) return false;
    if (std::abs(p - q) < 0.02 * std::max(std::abs(p), std::abs(q))) return false;
  }
  return true;
}

template <class Draw>
CircleTriple draw_triple(Rng& rng, Draw draw) {
  for (;;) {
    const std::array<Circle, 3> g = draw(rng);
    if (!proper_triangle(g[0].center(), g[1].center(), g[2].center())) continue;
    const CircleTriple t(g[0], g[1], g[2]);
    if (well_conditioned(t)) return t;
  }
}

}  // namespace

PairCase real_circle_case(Rng& rng) {
  for (;;) {
    const Circle c1 = random_circle(rng, 5.0);
    const Circle c2 = random_circle(rng, 5.0);
    if (dist(c1.center(), c2.center()) < 0.1) continue;
    const PowerRatio k = random_ratio(rng);
    if (classify(c1, c2, k) == LocusKind::RealCircle) return {c1, c2, k};
  }
}

PairCase windowed_circle_case(Rng& rng, double extent, double min_radius) {
  for (;;) {
    const Circle c1(rng.point(0.3 * extent), rng.uniform(0.5, 0.15 * extent));
    const Circle c2(rng.point(0.3 * extent), rng.uniform(0.5, 0.15 * extent));
    const PowerRatio k = PowerRatio::of(rng.uniform(-10.0, 10.0));
    const Locus l = generalized_locus(c1, c2, k);
    if (!l.is_circle()) continue;
    const Circle& c = l.circle();
    const Point m = c.center();
    const double reach = std::max(std::abs(m.x), std::abs(m.y)) + c.radius();
    if (c.radius() >= min_radius && reach <= 0.9 * extent) return {c1, c2, k};
  }
}

std::pair<Circle, Circle> separated_pair(Rng& rng) {
  for (;;) {
    const Circle c1(rng.point(kExtent), rng.uniform(0.2, 5.0));
    const Circle c2(rng.point(kExtent), rng.uniform(0.2, 5.0));
    const double d = dist(c1.center(), c2.center());
    const double r1 = c1.radius();
    const double r2 = c2.radius();
    const double margin = 0.01 * std::max({d, r1, r2});
    if (d >= r1 + r2 + margin) return {c1, c2};
    if (d > margin && d <= std::abs(r1 - r2) - margin) return {c1, c2};
    // Nested draws are rare at this extent; build one directly half the time.
    if (rng.uniform(0.0, 1.0) < 0.5) {
      const double big = std::max(r1, r2);
      const double small = rng.uniform(0.1, 0.8) * big;
      const double gap = big - small;
      const double offset = rng.uniform(0.05, 0.95) * gap;
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const Point center = c1.center() + Point{std::cos(angle), std::sin(angle)} * offset;
      if (offset > 0.01 * big && offset <= gap - 0.01 * big) return {Circle(c1.center(), big), Circle(center, small)};
    }
  }
}

std::pair<Circle, Circle> crossing_pair(Rng& rng) {
  for (;;) {
    const Circle c1(rng.point(kExtent), rng.uniform(0.5, 6.0));
    const Circle c2(rng.point(kExtent), rng.uniform(0.5, 6.0));
    const double d = dist(c1.center(), c2.center());
    const double margin = 0.02 * std::max({d, c1.radius(), c2.radius()});
    if (d > std::abs(c1.radius() - c2.radius()) + margin && d < c1.radius() + c2.radius() - margin) {
      return {c1, c2};
    }
  }
}

std::array<Point, 3> scalene_triangle(Rng& rng) {
  for (;;) {
    const std::array<Point, 3> t{rng.point(kExtent), rng.point(kExtent), rng.point(kExtent)};
    if (!proper_triangle(t[0], t[1], t[2])) continue;
    const double ab = dist(t[0], t[1]);
    const double bc = dist(t[1], t[2]);
    const double ca = dist(t[2], t[0]);
    const double gap = 0.01 * std::max({ab, bc, ca});
    if (std::abs(ab - bc) >= gap && std::abs(bc - ca) >= gap && std::abs(ca - ab) >= gap) return t;
  }
}

CircleTriple equal_radius_triple(Rng& rng) {
  return draw_triple(rng, [](Rng& r) {
    const std::array<Point, 3> o{r.point(kExtent), r.point(kExtent), r.point(kExtent)};
    const double side = std::min({dist(o[0], o[1]), dist(o[1], o[2]), dist(o[2], o[0])});
    const double rho = r.uniform(0.05, 1.2) * side;
    return std::array<Circle, 3>{Circle(o[0], rho), Circle(o[1], rho), Circle(o[2], rho)};
  });
}

CircleTriple equilateral_triple(Rng& rng) {
  return draw_triple(rng, [](Rng& r) {
    const Point c = r.point(0.5 * kExtent);
    const double side = r.uniform(1.0, 12.0);
    const double phase = r.uniform(0.0, 2.0 * std::numbers::pi);
    std::array<Circle, 3> g;
    for (int i = 0; i < 3; ++i) {
      const double a = phase + 2.0 * std::numbers::pi * i / 3.0;
      const Point o = c + Point{std::cos(a), std::sin(a)} * (side / std::sqrt(3.0));
      g[i] = Circle(o, r.uniform(0.0, 1.4) * side);
    }
    return g;
  });
}

CircleTriple generic_triple(Rng& rng) {
  return draw_triple(rng, [](Rng& r) {
    std::array<Circle, 3> g;
    for (auto& c : g) c = Circle(r.point(kExtent), r.uniform(0.1, 6.0));
    return g;
  });
}

}  // namespace apollonius::sampling
