#include "apollonius/power.hpp"

#include <algorithm>

#include "apollonius/errors.hpp"

namespace apollonius {

Line radical_axis(const Circle& c1, const Circle& c2, const Tolerance& tol) {
  const Point delta = c2.center() - c1.center();
  const double d = norm(delta);
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  const double scale = std::max({d, r1, r2});
  if (d == 0.0 || tol.near_zero(d, scale)) {
    throw GeometryError(ErrorCode::ConcentricCircles);
  }
  const Point u = delta / d;
  // Position along O1->O2, (d^2 + r1^2 - r2^2) / 2d.
  const double a = 0.5 * d + 0.5 * (r1 - r2) * (r1 + r2) / d;
  return Line::from_equation(u.x, u.y, dot(u, c1.center()) + a);
}

}  // namespace apollonius
