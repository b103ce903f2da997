#include "apollonius/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "apollonius/classic.hpp"
#include "apollonius/errors.hpp"
#include "apollonius/locus.hpp"
#include "apollonius/oracle.hpp"
#include "apollonius/power.hpp"
#include "apollonius/sampling.hpp"
#include "apollonius/triple.hpp"

namespace apollonius::selftest {

namespace {

using sampling::Rng;

SuiteResult suite(const std::string& name, std::uint64_t seed, std::size_t count,
                  const std::function<bool(Rng&)>& check) {
  Rng rng(seed);
  SuiteResult r{name, 0, count};
  for (std::size_t i = 0; i < count; ++i) {
    bool ok = false;
    try {
      ok = check(rng);
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok) ++r.passed;
  }
  return r;
}

bool locus_residual(Rng& rng) {
  const auto [c1, c2, k] = sampling::real_circle_case(rng);
  const Circle c = generalized_locus(c1, c2, k).circle();
  for (int i = 0; i < 64; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 64.0;
    const Point x = c.center() + Point{std::cos(t), std::sin(t)} * c.radius();
    const double bound = 1e-8 * std::max({1.0, std::abs(power(c1, x)), std::abs(power(c2, x))});
    if (std::abs(ratio_residual(c1, c2, k, x)) > bound) return false;
  }
  return true;
}

bool swap_symmetry(Rng& rng) {
  const auto [c1, c2, k] = sampling::real_circle_case(rng);
  const Circle a = generalized_locus(c1, c2, k).circle();
  const Locus b = generalized_locus(c2, c1, k.inverse());
  if (!b.is_circle()) return false;
  const double scale = std::max(norm(a.center()), a.radius());
  return dist(a.center(), b.circle().center()) <= 1e-9 * scale &&
         std::abs(a.radius() - b.circle().radius()) <= 1e-9 * scale;
}

bool thresholds(Rng& rng) {
  const auto [c1, c2] = sampling::separated_pair(rng);
  const double d = dist(c1.center(), c2.center());
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  const double s2 = std::pow(std::max({d, r1, r2}), 2);
  const KThresholds th = k_thresholds(c1, c2);
  const auto* two = std::get_if<TwoRoots>(&th);
  if (!two) return false;
  for (double k : {two->k_minus, two->k_plus}) {
    const double rad2 = (k * r2 * r2 - r1 * r1) / (k - 1.0) + k * d * d / ((k - 1.0) * (k - 1.0));
    if (std::abs(rad2) > 1e-9 * s2) return false;
  }
  const double mid = 0.5 * (two->k_minus + two->k_plus);
  return classify(c1, c2, PowerRatio::of(mid)) == LocusKind::Empty;
}

bool intersecting(Rng& rng) {
  const auto [c1, c2] = sampling::crossing_pair(rng);
  if (!std::holds_alternative<NoRealRoots>(k_thresholds(c1, c2))) return false;
  double k = rng.uniform(-10.0, 10.0);
  if (std::abs(k - 1.0) < 0.05) k += 0.5;
  const Locus l = generalized_locus(c1, c2, PowerRatio::of(k));
  if (!l.is_circle()) return false;
  for (Point s : circle_intersection(c1, c2)) {
    if (std::abs(dist(s, l.circle().center()) - l.circle().radius()) > 1e-8) return false;
  }
  return true;
}

bool classic_reduction(Rng& rng) {
  const auto t = sampling::scalene_triangle(rng);
  const ClassicApollonius a = classic_apollonius(t[0], t[1], t[2]);
  const Locus b = apollonius_of_point(t[0], Circle(t[1], 0.0), Circle(t[2], 0.0));
  if (!a.locus.is_circle() || !b.is_circle()) return false;
  const double scale = std::max(norm(*a.center), *a.radius);
  return dist(*a.center, b.circle().center()) <= 1e-12 * scale &&
         std::abs(*a.radius - b.circle().radius()) <= 1e-12 * *a.radius;
}

bool triangle_theorems(Rng& rng) {
  const auto t = sampling::scalene_triangle(rng);
  const double s2 = std::max({dist2(t[0], t[1]), dist2(t[1], t[2]), dist2(t[2], t[0])});
  const Circle ka = classic_apollonius(t[0], t[1], t[2]).locus.circle();
  const BisectorFeet feet = bisector_feet(t[0], t[1], t[2]);
  if (std::abs(power(ka, feet.internal)) > 1e-9 * s2 || std::abs(power(ka, feet.external)) > 1e-9 * s2) return false;
  const LemoineData lem = lemoine_data(t[0], t[1], t[2]);
  if (std::abs(power(ka, lem.o) - dist2(t[0], lem.o)) > 1e-9 * s2) return false;
  const Tolerance loose(1e-8, 1e-8);
  return collinear(lem.m_a, lem.m_b, lem.m_c, loose) && collinear(lem.o, lem.s1, lem.s2, loose);
}

bool criterion_family(Rng& rng) {
  // Family drawn per case; equal radii and equilateral centers must come out collinear.
  const int family = static_cast<int>(rng.uniform(0.0, 3.0));
  const CircleTriple t = family == 0   ? sampling::equal_radius_triple(rng)
                         : family == 1 ? sampling::equilateral_triple(rng)
                                       : sampling::generic_triple(rng);
  const TripleReport r = triple_report(t);
  return family == 2 || r.collinear;
}

bool concurrence(Rng& rng) {
  const CircleTriple t = sampling::equal_radius_triple(rng);
  const KRadicalAxes axes = k_radical_axes(t);
  for (const Line& l : axes.axes) {
    if (!l.approx_equal(axes.axes[0], Tolerance(1e-8, 1e-12), 1.0)) return false;
    if (point_line_distance(l, axes.o) > 1e-8 * t.scale()) return false;
  }
  return true;
}

bool closed_form(Rng& rng) {
  const CircleTriple t = sampling::generic_triple(rng);
  const GeneralizedCenters g = generalized_centers(t);
  const Point o = t.circumcircle().center();
  for (int i = 0; i < 3; ++i) {
    if (!g.k_circles[i].is_circle()) continue;
    const double direct = power(g.k_circles[i].circle(), o);
    if (std::abs(circumcenter_power(t, i + 1) - direct) > 1e-9 * t.scale() * t.scale()) return false;
  }
  return true;
}

bool oracle_agreement(Rng& rng) {
  const auto [c1, c2, k] = sampling::windowed_circle_case(rng, 20.0, 2.0);
  const oracle::ScanWindow w{-20.0, 20.0, -20.0, 20.0, 0.1};
  const oracle::VerifyReport rep = oracle::verify_locus(generalized_locus(c1, c2, k), c1, c2, k, w);
  return rep.tags_agree && rep.fit.has_value();
}

}  // namespace

std::vector<SuiteResult> run(std::uint64_t seed) {
  // Each suite gets its own stream so adding one does not shift the others.
  const auto sub = [seed](std::uint64_t i) { return seed * 0x9E3779B97F4A7C15ULL + i; };
  return {
      suite("locus-residual", sub(1), 300, locus_residual),
      suite("swap-symmetry", sub(2), 200, swap_symmetry),
      suite("thresholds", sub(3), 200, thresholds),
      suite("intersecting-circles", sub(4), 200, intersecting),
      suite("classic-reduction", sub(5), 300, classic_reduction),
      suite("triangle-theorems", sub(6), 200, triangle_theorems),
      suite("collinearity-criterion", sub(7), 300, criterion_family),
      suite("concurrence", sub(8), 100, concurrence),
      suite("circumcenter-power", sub(9), 300, closed_form),
      suite("oracle-agreement", sub(10), 5, oracle_agreement),
  };
}

std::string format(std::uint64_t seed, const std::vector<SuiteResult>& results) {
  std::string out = "selftest seed=" + std::to_string(seed) + "\n";
  std::size_t passed = 0;
  std::size_t total = 0;
  for (const SuiteResult& r : results) {
    out += r.name + ": " + std::to_string(r.passed) + "/" + std::to_string(r.total) +
           (r.ok() ? " pass" : " FAIL") + "\n";
    passed += r.passed;
    total += r.total;
  }
  out += "total: " + std::to_string(passed) + "/" + std::to_string(total) + "\n";
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.ok(); });
}

}  // namespace apollonius::selftest
