#pragma once

#include <string_view>
#include <variant>

#include "apollonius/geom.hpp"
#include "apollonius/power.hpp"

namespace apollonius {

// Projective ratio k = num : den. A point X satisfies the ratio against two
// circles when den * P1(X) == num * P2(X), so (1:0) and (0:1) need no division.
class PowerRatio {
 public:
  // Throws InvalidRatio when both parts are zero or either is not finite.
  PowerRatio(double num, double den);

  static PowerRatio of(double k) { return PowerRatio(k, 1.0); }
  static PowerRatio infinite() { return PowerRatio(1.0, 0.0); }

  double num() const noexcept { return num_; }
  double den() const noexcept { return den_; }
  bool is_infinite() const noexcept { return den_ == 0.0; }
  // num / den; +infinity for (x:0).
  double value() const noexcept;
  PowerRatio inverse() const { return PowerRatio(den_, num_); }

  // Cross-multiplication after scaling both pairs to unit max-norm.
  bool approx_equal(const PowerRatio& other, const Tolerance& tol = kDefaultTolerance) const;

 private:
  double num_;
  double den_;
};

enum class LocusKind { RealCircle, Line, SinglePoint, Empty, WholePlane };

std::string_view to_string(LocusKind kind);

struct EmptySet {
  friend bool operator==(EmptySet, EmptySet) { return true; }
};
struct WholePlane {
  friend bool operator==(WholePlane, WholePlane) { return true; }
};

// Possibly-degenerate result of the power-ratio locus construction.
class Locus {
 public:
  using Geometry = std::variant<Circle, Line, Point, EmptySet, WholePlane>;

  Locus() : geometry_(EmptySet{}) {}
  // Throws InvalidArgument for a circle of radius zero; use a Point instead.
  explicit Locus(Geometry geometry);

  LocusKind kind() const noexcept { return static_cast<LocusKind>(geometry_.index()); }
  const Geometry& geometry() const noexcept { return geometry_; }

  bool is_circle() const noexcept { return kind() == LocusKind::RealCircle; }
  // These throw std::bad_variant_access on a tag mismatch.
  const Circle& circle() const { return std::get<Circle>(geometry_); }
  const Line& line() const { return std::get<Line>(geometry_); }
  const Point& point() const { return std::get<Point>(geometry_); }

 private:
  Geometry geometry_;
};

struct TwoRoots {
  double k_minus;
  double k_plus;
};
struct DoubleRoot {
  double k;
};
struct NoRealRoots {};
struct LinearCase {
  double k;
};

// Values of k at which the locus shrinks to a single point.
using KThresholds = std::variant<TwoRoots, DoubleRoot, NoRealRoots, LinearCase>;

// (P1(a) : P2(a)), unreduced. Throws IndeterminateRatio when a is on both circles.
PowerRatio power_ratio_of_point(Point a, const Circle& c1, const Circle& c2,
                                const Tolerance& tol = kDefaultTolerance);

/// Locus of points X with P1(X) = k P2(X).
///
/// The construction works in the frame with c1's center at the origin and
/// c2's center on the positive x-axis. For k != 1 the locus is centered at
/// k/(k-1) * d along the center line and has squared radius
///
///   (k r2^2 - r1^2) / (k-1) + k d^2 / (k-1)^2,
///
/// evaluated in homogeneous form. Exact (0:1) and (1:0) return c1 and c2
/// themselves. Squared radii within tol * scale^2 of zero become a single
/// point; scale is the largest of d, r1 and r2. For k within tol of 1 the
/// result is the radical axis, or for concentric circles the whole plane or
/// nothing.
Locus generalized_locus(const Circle& c1, const Circle& c2, const PowerRatio& k,
                        const Tolerance& tol = kDefaultTolerance);

// Roots of r2^2 k^2 + (d^2 - r1^2 - r2^2) k + r1^2.
KThresholds k_thresholds(const Circle& c1, const Circle& c2, const Tolerance& tol = kDefaultTolerance);

LocusKind classify(const Circle& c1, const Circle& c2, const PowerRatio& k,
                   const Tolerance& tol = kDefaultTolerance);

// The locus through a with a's own power ratio. Throws IndeterminateRatio.
Locus apollonius_of_point(Point a, const Circle& c1, const Circle& c2,
                          const Tolerance& tol = kDefaultTolerance);

// den * P1(x) - num * P2(x)
inline double ratio_residual(const Circle& c1, const Circle& c2, const PowerRatio& k, Point x) {
  return k.den() * power(c1, x) - k.num() * power(c2, x);
}

}  // namespace apollonius
