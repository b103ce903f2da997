#pragma once

#include <cmath>
#include <vector>

namespace apollonius {

// Comparisons pass when |x - y| <= eps_abs + eps_rel * scale, where scale is
// the characteristic magnitude of the compared quantity (a length, a squared
// length, ...). Callers choose the scale.
class Tolerance {
 public:
  constexpr Tolerance() = default;
  Tolerance(double eps_abs, double eps_rel);

  // Same value for both components.
  static Tolerance uniform(double eps);

  double eps_abs() const noexcept { return eps_abs_; }
  double eps_rel() const noexcept { return eps_rel_; }

  double bound(double scale) const noexcept { return eps_abs_ + eps_rel_ * std::abs(scale); }
  bool near(double x, double y, double scale) const noexcept {
    return std::abs(x - y) <= bound(scale);
  }
  bool near_zero(double x, double scale) const noexcept { return std::abs(x) <= bound(scale); }

 private:
  double eps_abs_ = 1e-9;
  double eps_rel_ = 1e-9;
};

inline constexpr Tolerance kDefaultTolerance{};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
  friend Point operator*(double s, Point a) { return {a.x * s, a.y * s}; }
  friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist2(Point a, Point b) { return norm2(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Ascending y, then x. Used wherever a point list must be deterministic.
inline bool y_then_x_less(Point a, Point b) { return a.y < b.y || (a.y == b.y && a.x < b.x); }

class Circle {
 public:
  Circle() = default;
  // Throws InvalidArgument for a negative or non-finite radius or center.
  Circle(Point center, double radius);

  Point center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }

  friend bool operator==(const Circle&, const Circle&) = default;

 private:
  Point center_{};
  double radius_ = 0.0;
};

// {X : normal . X = offset}, normal of unit length with nx > 0, or nx == 0 and ny > 0.
class Line {
 public:
  // The y-axis.
  Line() = default;

  // Normalizes (a, b) and flips the sign into canonical orientation.
  static Line from_equation(double a, double b, double offset);

  Point normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }
  // Unit direction, normal rotated a quarter turn counterclockwise.
  Point direction() const noexcept { return perp(normal_); }
  // Foot of the perpendicular from the origin.
  Point anchor() const noexcept { return normal_ * offset_; }
  double signed_distance(Point p) const noexcept { return dot(normal_, p) - offset_; }

  // Same point set: coefficient differences within tol, under either orientation.
  bool approx_equal(const Line& other, const Tolerance& tol, double scale) const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line(Point normal, double offset) : normal_(normal), offset_(offset) {}

  Point normal_{1.0, 0.0};
  double offset_ = 0.0;
};

// Throws CollinearInput when the points do not span a triangle.
Circle circumcircle(Point p1, Point p2, Point p3, const Tolerance& tol = kDefaultTolerance);

// Zero, one (tangency) or two points, ascending y then x. Throws IdenticalCircles.
std::vector<Point> circle_intersection(const Circle& c1, const Circle& c2,
                                       const Tolerance& tol = kDefaultTolerance);

// Throws CoincidentPoints.
Line line_through(Point p, Point q, const Tolerance& tol = kDefaultTolerance);

double point_line_distance(const Line& l, Point p);

bool collinear(Point p1, Point p2, Point p3, const Tolerance& tol = kDefaultTolerance);

}  // namespace apollonius
