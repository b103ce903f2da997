#include "apollonius/geom.hpp"

#include <algorithm>

#include "apollonius/errors.hpp"

namespace apollonius {

Tolerance::Tolerance(double eps_abs, double eps_rel) : eps_abs_(eps_abs), eps_rel_(eps_rel) {
  if (!(eps_abs > 0.0) || !(eps_rel > 0.0) || !std::isfinite(eps_abs) || !std::isfinite(eps_rel)) {
    throw GeometryError(ErrorCode::InvalidArgument, "tolerance components must be positive");
  }
}

Tolerance Tolerance::uniform(double eps) { return Tolerance(eps, eps); }

Circle::Circle(Point center, double radius) : center_(center), radius_(radius) {
  if (!is_finite(center)) {
    throw GeometryError(ErrorCode::InvalidArgument, "circle center must be finite");
  }
  if (!std::isfinite(radius) || radius < 0.0) {
    throw GeometryError(ErrorCode::InvalidArgument, "circle radius must be finite and >= 0");
  }
}

Line Line::from_equation(double a, double b, double offset) {
  const double len = std::hypot(a, b);
  if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(offset)) {
    throw GeometryError(ErrorCode::InvalidArgument, "line normal must be finite and nonzero");
  }
  Point n{a / len, b / len};
  double c = offset / len;
  if (n.x < 0.0 || (n.x == 0.0 && n.y < 0.0)) {
    n = n * -1.0;
    c = -c;
  }
  // -0.0 would otherwise survive the flip above and leak into reports.
  if (n.x == 0.0) n.x = 0.0;
  if (n.y == 0.0) n.y = 0.0;
  return Line(n, c);
}

bool Line::approx_equal(const Line& other, const Tolerance& tol, double scale) const {
  const auto same = [&](Point n, double c) {
    return tol.near(normal_.x, n.x, 1.0) && tol.near(normal_.y, n.y, 1.0) &&
           tol.near(offset_, c, scale);
  };
  return same(other.normal_, other.offset_) || same(other.normal_ * -1.0, -other.offset_);
}

Circle circumcircle(Point p1, Point p2, Point p3, const Tolerance& tol) {
  const Point b = p2 - p1;
  const Point c = p3 - p1;
  const double scale2 = std::max({norm2(b), norm2(c), dist2(p2, p3)});
  const double area2 = cross(b, c);
  if (scale2 == 0.0 || tol.near_zero(area2, scale2)) {
    throw GeometryError(ErrorCode::CollinearInput);
  }
  const double d = 2.0 * area2;
  const double bb = norm2(b);
  const double cc = norm2(c);
  const Point u{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
  return Circle(p1 + u, norm(u));
}

std::vector<Point> circle_intersection(const Circle& c1, const Circle& c2, const Tolerance& tol) {
  const Point delta = c2.center() - c1.center();
  const double d = norm(delta);
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  const double scale = std::max({d, r1, r2});
  if (tol.near_zero(d, scale) && tol.near(r1, r2, scale)) {
    throw GeometryError(ErrorCode::IdenticalCircles);
  }
  if (tol.near_zero(d, scale)) return {};

  const Point u = delta / d;
  // Signed distance from c1's center to the chord, (d^2 + r1^2 - r2^2) / 2d.
  const double a = 0.5 * d + 0.5 * (r1 - r2) * (r1 + r2) / d;
  const double h2 = (r1 - a) * (r1 + a);
  const double band = tol.bound(scale * scale);
  if (h2 < -band) return {};
  const Point foot = c1.center() + u * a;
  if (h2 <= band) return {foot};

  const double h = std::sqrt(h2);
  std::vector<Point> out{foot + perp(u) * h, foot - perp(u) * h};
  std::sort(out.begin(), out.end(), y_then_x_less);
  return out;
}

Line line_through(Point p, Point q, const Tolerance& tol) {
  // Fixed argument order makes the result independent of the call order.
  if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
  const Point dir = q - p;
  const double len = norm(dir);
  const double scale = std::max(norm(p), norm(q));
  if (len == 0.0 || tol.near_zero(len, scale)) {
    throw GeometryError(ErrorCode::CoincidentPoints);
  }
  const Point n = perp(dir) / len;
  return Line::from_equation(n.x, n.y, dot(n, p));
}

double point_line_distance(const Line& l, Point p) { return std::abs(l.signed_distance(p)); }

bool collinear(Point p1, Point p2, Point p3, const Tolerance& tol) {
  const double scale2 = std::max({dist2(p1, p2), dist2(p1, p3), dist2(p2, p3)});
  return tol.near_zero(cross(p2 - p1, p3 - p1), scale2);
}

}  // namespace apollonius
