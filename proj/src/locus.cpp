#include "apollonius/locus.hpp"

#include <algorithm>
#include <cmath>

#include "apollonius/errors.hpp"
#include "apollonius/power.hpp"

namespace apollonius {

PowerRatio::PowerRatio(double num, double den) : num_(num), den_(den) {
  if (!std::isfinite(num) || !std::isfinite(den) || (num == 0.0 && den == 0.0)) {
    throw GeometryError(ErrorCode::InvalidRatio);
  }
}

double PowerRatio::value() const noexcept {
  if (den_ == 0.0) return HUGE_VAL;
  return num_ / den_;
}

namespace {

struct UnitPair {
  double p;
  double q;
};

// Scaled to max(|p|, |q|) == 1 with q >= 0.
UnitPair unit_pair(const PowerRatio& k) {
  const double m = std::max(std::abs(k.num()), std::abs(k.den()));
  double p = k.num() / m;
  double q = k.den() / m;
  if (q < 0.0 || (q == 0.0 && p < 0.0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

Locus point_circle_locus(const Circle& c) {
  if (c.radius() > 0.0) return Locus(c);
  return Locus(c.center());
}

}  // namespace

bool PowerRatio::approx_equal(const PowerRatio& other, const Tolerance& tol) const {
  const UnitPair a = unit_pair(*this);
  const UnitPair b = unit_pair(other);
  return tol.near_zero(a.p * b.q - a.q * b.p, 1.0);
}

std::string_view to_string(LocusKind kind) {
  switch (kind) {
    case LocusKind::RealCircle: return "circle";
    case LocusKind::Line: return "line";
    case LocusKind::SinglePoint: return "point";
    case LocusKind::Empty: return "empty";
    case LocusKind::WholePlane: return "plane";
  }
  return "unknown";
}

Locus::Locus(Geometry geometry) : geometry_(std::move(geometry)) {
  if (const auto* c = std::get_if<Circle>(&geometry_); c && !(c->radius() > 0.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "circle locus needs a positive radius");
  }
}

PowerRatio power_ratio_of_point(Point a, const Circle& c1, const Circle& c2, const Tolerance& tol) {
  const double p1 = power(c1, a);
  const double p2 = power(c2, a);
  const double scale = std::max({dist(a, c1.center()), dist(a, c2.center()), c1.radius(), c2.radius()});
  const double band = tol.bound(scale * scale);
  if (std::abs(p1) <= band && std::abs(p2) <= band) {
    throw GeometryError(ErrorCode::IndeterminateRatio);
  }
  return PowerRatio(p1, p2);
}

Locus generalized_locus(const Circle& c1, const Circle& c2, const PowerRatio& k, const Tolerance& tol) {
  const auto [p, q] = unit_pair(k);
  if (q == 0.0) return point_circle_locus(c2);
  if (p == 0.0) return point_circle_locus(c1);

  const Point delta = c2.center() - c1.center();
  const double d = norm(delta);
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  const double scale = std::max({d, r1, r2});
  const double band = tol.bound(scale * scale);

  if (std::abs(p - q) <= tol.bound(1.0) * q) {
    if (!tol.near_zero(d, scale)) return Locus(radical_axis(c1, c2, tol));
    if (std::abs((r1 - r2) * (r1 + r2)) <= band) return Locus(WholePlane{});
    return Locus(EmptySet{});
  }

  const Point u = d > 0.0 ? delta / d : Point{1.0, 0.0};
  const double pq = p - q;
  const Point center = c1.center() + u * (p / pq * d);
  // (k r2^2 - r1^2)(k - 1) + k d^2, multiplied through by q^2.
  const double numer = (p * r2 * r2 - q * r1 * r1) * pq + p * q * d * d;
  const double radius2 = numer / (pq * pq);
  if (radius2 > band) return Locus(Circle(center, std::sqrt(radius2)));
  if (radius2 >= -band) return Locus(center);
  return Locus(EmptySet{});
}

KThresholds k_thresholds(const Circle& c1, const Circle& c2, const Tolerance& tol) {
  const double d = dist(c1.center(), c2.center());
  const double r1 = c1.radius();
  const double r2 = c2.radius();
  const double scale = std::max({d, r1, r2});
  const double s2 = scale * scale;

  const double b = (d - r1) * (d + r1) - r2 * r2;
  const double c = r1 * r1;
  if (tol.near_zero(r2, scale)) {
    if (tol.near_zero(b, s2)) return NoRealRoots{};
    return LinearCase{-c / b};
  }

  const double a = r2 * r2;
  // (d^2 - (r1 + r2)^2)(d^2 - (r1 - r2)^2), factored to keep tangency exact.
  const double gap = std::abs(r1 - r2);
  const double disc = (d - r1 - r2) * (d + r1 + r2) * (d - gap) * (d + gap);
  const double band4 = tol.bound(s2 * s2);
  if (disc < -band4) return NoRealRoots{};
  if (disc <= band4) return DoubleRoot{-b / (2.0 * a)};

  const double s = std::sqrt(disc);
  const double half = b >= 0.0 ? -0.5 * (b + s) : 0.5 * (s - b);
  double k1 = half / a;
  double k2 = c / half;
  if (k1 > k2) std::swap(k1, k2);
  return TwoRoots{k1, k2};
}

LocusKind classify(const Circle& c1, const Circle& c2, const PowerRatio& k, const Tolerance& tol) {
  return generalized_locus(c1, c2, k, tol).kind();
}

Locus apollonius_of_point(Point a, const Circle& c1, const Circle& c2, const Tolerance& tol) {
  return generalized_locus(c1, c2, power_ratio_of_point(a, c1, c2, tol), tol);
}

}  // namespace apollonius
