#include "apollonius/triple.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "apollonius/errors.hpp"
#include "apollonius/power.hpp"

namespace apollonius {

namespace {

double triple_scale(const Circle& g1, const Circle& g2, const Circle& g3) {
  return std::max({dist(g1.center(), g2.center()), dist(g2.center(), g3.center()),
                   dist(g3.center(), g1.center()), g1.radius(), g2.radius(), g3.radius()});
}

Circle checked_circumcircle(const Circle& g1, const Circle& g2, const Circle& g3, const Tolerance& tol) {
  try {
    return circumcircle(g1.center(), g2.center(), g3.center(), tol);
  } catch (const GeometryError&) {
    throw GeometryError(ErrorCode::DegenerateTriangle, "circle centers do not form a triangle");
  }
}

// P_j(O_i) with cyclic indices.
double cross_power(const CircleTriple& t, int i, int j) { return power(t.circle(j), t.center(i)); }

}  // namespace

CircleTriple::CircleTriple(const Circle& g1, const Circle& g2, const Circle& g3, const Tolerance& tol)
    : circles_{g1, g2, g3},
      scale_(triple_scale(g1, g2, g3)),
      circumcircle_(checked_circumcircle(g1, g2, g3, tol)) {}

PowerRatio k_ratio(const CircleTriple& t, int i, const Tolerance& tol) {
  const double p = cross_power(t, i, i + 1);
  const double q = cross_power(t, i, i + 2);
  const double band = tol.bound(t.scale() * t.scale());
  const int label = CircleTriple::wrap(i) + 1;
  if (std::abs(p) <= band || std::abs(q) <= band) {
    throw DegenerateKError(label, DegenerateKError::Reason::ZeroPower);
  }
  if (std::abs(p - q) <= band) throw DegenerateKError(label, DegenerateKError::Reason::EqualPowers);
  return PowerRatio(p, q);
}

GeneralizedCenters generalized_centers(const CircleTriple& t, const Tolerance& tol) {
  GeneralizedCenters out;
  for (int i = 0; i < 3; ++i) {
    const Locus k = generalized_locus(t.circle(i + 1), t.circle(i + 2), k_ratio(t, i, tol), tol);
    switch (k.kind()) {
      case LocusKind::RealCircle: out.m[i] = k.circle().center(); break;
      case LocusKind::SinglePoint: out.m[i] = k.point(); break;
      default: throw DegenerateKError(i + 1, DegenerateKError::Reason::NotACircle);
    }
    out.k_circles[i] = k;
  }
  return out;
}

double menelaus_product(const CircleTriple& t, const Tolerance& tol) {
  double num = 1.0;
  double den = 1.0;
  for (int i = 0; i < 3; ++i) {
    const PowerRatio k = k_ratio(t, i, tol);
    num *= k.num();
    den *= k.den();
  }
  return num / den;
}

CollinearityBalance collinearity_balance(const CircleTriple& t) {
  CollinearityBalance b{0.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    const double d_next = dist2(t.center(i), t.center(i + 1));
    const double d_prev = dist2(t.center(i), t.center(i + 2));
    const double r_next = t.radius(i + 1) * t.radius(i + 1);
    const double r_prev = t.radius(i + 2) * t.radius(i + 2);
    b.lhs += d_next * d_prev * (r_next - r_prev);
    b.rhs += r_next * r_prev * (d_next - d_prev);
  }
  return b;
}

namespace {

struct Verdicts {
  bool menelaus;
  bool balance;
  bool geometric;
};

Verdicts verdicts(const CircleTriple& t, const std::array<Point, 3>& m, double menelaus,
                  const CollinearityBalance& b, const Tolerance& tol) {
  const double s2 = t.scale() * t.scale();
  return {tol.near(menelaus, 1.0, 1.0), tol.near(b.lhs, b.rhs, s2 * s2 * s2),
          collinear(m[0], m[1], m[2], tol)};
}

bool agreed(const Verdicts& v) {
  if (v.menelaus == v.balance && v.balance == v.geometric) return v.menelaus;
  throw GeometryError(ErrorCode::InternalInconsistency,
                      std::string("menelaus=") + (v.menelaus ? "yes" : "no") +
                          " balance=" + (v.balance ? "yes" : "no") +
                          " geometric=" + (v.geometric ? "yes" : "no"));
}

}  // namespace

bool collinearity_predicate(const CircleTriple& t, const Tolerance& tol) {
  return triple_report(t, tol).collinear;
}

TripleReport triple_report(const CircleTriple& t, const Tolerance& tol) {
  GeneralizedCenters centers = generalized_centers(t, tol);
  TripleReport r;
  r.m = centers.m;
  r.k_circles = std::move(centers.k_circles);
  r.menelaus = menelaus_product(t, tol);
  const CollinearityBalance b = collinearity_balance(t);
  r.balance_lhs = b.lhs;
  r.balance_rhs = b.rhs;
  r.collinear = agreed(verdicts(t, r.m, r.menelaus, b, tol));
  return r;
}

Line lemoine_line_generalized(const CircleTriple& t, const Tolerance& tol) {
  const TripleReport r = triple_report(t, tol);
  if (!r.collinear) throw NotCollinearError(r.balance_lhs - r.balance_rhs);
  // Through the farthest pair; the third center is the best-conditioned check.
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (dist2(r.m[(i + 1) % 3], r.m[(i + 2) % 3]) > dist2(r.m[(best + 1) % 3], r.m[(best + 2) % 3])) {
      best = i;
    }
  }
  return line_through(r.m[(best + 1) % 3], r.m[(best + 2) % 3], tol);
}

KRadicalAxes k_radical_axes(const CircleTriple& t, const Tolerance& tol) {
  const TripleReport r = triple_report(t, tol);
  if (!r.collinear) throw NotCollinearError(r.balance_lhs - r.balance_rhs);
  for (int i = 0; i < 3; ++i) {
    if (!r.k_circles[i].is_circle()) throw DegenerateKError(i + 1, DegenerateKError::Reason::NotACircle);
  }
  KRadicalAxes out{{}, t.circumcircle().center()};
  for (int i = 0; i < 3; ++i) {
    out.axes[i] = radical_axis(r.k_circles[(i + 1) % 3].circle(), r.k_circles[(i + 2) % 3].circle(), tol);
  }
  return out;
}

double circumcenter_power(const CircleTriple& t, int index, const Tolerance& tol) {
  if (index < 1 || index > 3) throw GeometryError(ErrorCode::InvalidArgument, "index must be 1, 2 or 3");
  const int i = index - 1;
  const PowerRatio k = k_ratio(t, i, tol);
  const Locus locus = generalized_locus(t.circle(i + 1), t.circle(i + 2), k, tol);
  if (!locus.is_circle()) throw DegenerateKError(index, DegenerateKError::Reason::NotACircle);

  const double r2 = t.circumcircle().radius() * t.circumcircle().radius();
  const double ra2 = t.radius(i + 1) * t.radius(i + 1);
  const double rb2 = t.radius(i + 2) * t.radius(i + 2);
  const double p = k.num();
  const double q = k.den();
  // (k rb^2 - ra^2) / (k - 1) with k = p / q, multiplied through by q.
  return r2 - (p * rb2 - q * ra2) / (p - q);
}

}  // namespace apollonius
