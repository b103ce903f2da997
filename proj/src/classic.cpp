#include "apollonius/classic.hpp"

#include <algorithm>
#include <cmath>

#include "apollonius/errors.hpp"

namespace apollonius {

namespace {

// Division points of segment bc at |Xb| : |Xc| = u : v, from the squared
// lengths. The external fraction u / (u - v) is rewritten as
// u (u + v) / (u^2 - v^2) so the difference is taken between squares.
BisectorFeet divide(Point b, Point c, double u2, double v2) {
  const double u = std::sqrt(u2);
  const double v = std::sqrt(v2);
  const Point bc = c - b;
  const double inner = u / (u + v);
  const double outer = u * (u + v) / (u2 - v2);
  return {b + bc * inner, b + bc * outer};
}

ClassicApollonius circle_from_feet(const BisectorFeet& feet) {
  const Point center = (feet.internal + feet.external) * 0.5;
  const double radius = 0.5 * dist(feet.internal, feet.external);
  return {Locus(Circle(center, radius)), center, radius};
}

Line perpendicular_bisector(Point b, Point c) {
  const Point n = c - b;
  return Line::from_equation(n.x, n.y, dot(n, (b + c) * 0.5));
}

double longest_side(Point a, Point b, Point c) {
  return std::sqrt(std::max({dist2(a, b), dist2(b, c), dist2(c, a)}));
}

void require_distinct(Point a, Point b, Point c, const Tolerance& tol) {
  const double scale = longest_side(a, b, c);
  if (scale == 0.0 || tol.near_zero(dist(a, b), scale) || tol.near_zero(dist(b, c), scale) ||
      tol.near_zero(dist(c, a), scale)) {
    throw GeometryError(ErrorCode::CoincidentPoints);
  }
}

}  // namespace

Locus classic_ratio_locus(Point b, Point c, double lambda, const Tolerance& tol) {
  const double scale = std::max(norm(b), norm(c));
  if (b == c || tol.near_zero(dist(b, c), scale)) throw GeometryError(ErrorCode::CoincidentPoints);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw GeometryError(ErrorCode::NonpositiveRatio);
  if (tol.near(lambda, 1.0, 1.0)) return Locus(perpendicular_bisector(b, c));
  return circle_from_feet(divide(b, c, lambda * lambda, 1.0)).locus;
}

ClassicApollonius classic_apollonius(Point a, Point b, Point c, const Tolerance& tol) {
  require_distinct(a, b, c, tol);
  const double ab2 = dist2(a, b);
  const double ac2 = dist2(a, c);
  if (tol.near(std::sqrt(ab2), std::sqrt(ac2), longest_side(a, b, c))) {
    return {Locus(perpendicular_bisector(b, c)), std::nullopt, std::nullopt};
  }
  return circle_from_feet(divide(b, c, ab2, ac2));
}

BisectorFeet bisector_feet(Point a, Point b, Point c, const Tolerance& tol) {
  require_distinct(a, b, c, tol);
  const double ab2 = dist2(a, b);
  const double ac2 = dist2(a, c);
  if (tol.near(std::sqrt(ab2), std::sqrt(ac2), longest_side(a, b, c))) {
    throw GeometryError(ErrorCode::IsoscelesDegenerate);
  }
  if (collinear(a, b, c, tol)) throw GeometryError(ErrorCode::CollinearABC);
  return divide(b, c, ab2, ac2);
}

LemoineData lemoine_data(Point a, Point b, Point c, const Tolerance& tol) {
  const double scale = longest_side(a, b, c);
  if (scale == 0.0 || collinear(a, b, c, tol)) throw GeometryError(ErrorCode::DegenerateTriangle);
  const double ab = dist(a, b);
  const double bc = dist(b, c);
  const double ca = dist(c, a);
  if (tol.near(ab, bc, scale) || tol.near(bc, ca, scale) || tol.near(ca, ab, scale)) {
    throw GeometryError(ErrorCode::NotScalene);
  }

  const ClassicApollonius ka = classic_apollonius(a, b, c, tol);
  const ClassicApollonius kb = classic_apollonius(b, c, a, tol);
  const ClassicApollonius kc = classic_apollonius(c, a, b, tol);

  const auto s = circle_intersection(ka.locus.circle(), kb.locus.circle(), tol);
  if (s.size() != 2) {
    throw GeometryError(ErrorCode::NumericalDegeneracy, "Apollonius circles do not meet twice");
  }

  LemoineData out{*ka.center, *kb.center, *kc.center, s[0], s[1],
                  circumcircle(a, b, c, tol).center(), line_through(*ka.center, *kb.center, tol)};
  return out;
}

}  // namespace apollonius
