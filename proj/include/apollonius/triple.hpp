#pragma once

#include <array>

#include "apollonius/geom.hpp"
#include "apollonius/locus.hpp"

namespace apollonius {

// Three circles whose centers form a proper triangle. Indexing is cyclic:
// circle(i + 3) is circle(i). Indices here are 0-based; reports and errors
// use the 1-based labels O_1, O_2, O_3.
class CircleTriple {
 public:
  // Throws DegenerateTriangle when the centers coincide or are collinear.
  CircleTriple(const Circle& g1, const Circle& g2, const Circle& g3,
               const Tolerance& tol = kDefaultTolerance);

  const Circle& circle(int i) const { return circles_[wrap(i)]; }
  Point center(int i) const { return circle(i).center(); }
  double radius(int i) const { return circle(i).radius(); }

  // Largest of the pairwise center distances and the radii.
  double scale() const noexcept { return scale_; }
  const Circle& circumcircle() const noexcept { return circumcircle_; }

  static int wrap(int i) { return ((i % 3) + 3) % 3; }

 private:
  std::array<Circle, 3> circles_;
  double scale_;
  Circle circumcircle_;
};

// M_i = M_{O_i}(G_{i+1}, G_{i+2}) and K_i = K_{O_i}(G_{i+1}, G_{i+2}).
struct GeneralizedCenters {
  std::array<Point, 3> m;
  std::array<Locus, 3> k_circles;
};

struct CollinearityBalance {
  double lhs;
  double rhs;
};

struct TripleReport {
  std::array<Point, 3> m;
  std::array<Locus, 3> k_circles;
  double menelaus = 0.0;
  double balance_lhs = 0.0;
  double balance_rhs = 0.0;
  bool collinear = false;
};

struct KRadicalAxes {
  std::array<Line, 3> axes;
  Point o;
};

// k_i = P_{i+1}(O_i) : P_{i+2}(O_i). Throws DegenerateKError when either power
// vanishes or the two are equal.
PowerRatio k_ratio(const CircleTriple& t, int i, const Tolerance& tol = kDefaultTolerance);

GeneralizedCenters generalized_centers(const CircleTriple& t, const Tolerance& tol = kDefaultTolerance);

// Product of the three power ratios k_1 k_2 k_3. Equals 1 exactly when the
// centers M_i are collinear.
double menelaus_product(const CircleTriple& t, const Tolerance& tol = kDefaultTolerance);

/// Both sides of the polynomial collinearity condition
///
///   sum_i |O_i O_{i+1}|^2 |O_i O_{i+2}|^2 (r_{i+1}^2 - r_{i+2}^2)
///     = sum_i r_{i+1}^2 r_{i+2}^2 (|O_i O_{i+1}|^2 - |O_i O_{i+2}|^2)
///
/// evaluated term by term. Needs no nondegeneracy beyond the triangle.
CollinearityBalance collinearity_balance(const CircleTriple& t);

/// True when M_1, M_2, M_3 are collinear.
///
/// Three tests run: |menelaus - 1| <= tol, |lhs - rhs| <= tol * scale^6, and
/// the cross-product test on the computed centers. They must agree; a split
/// verdict throws InternalInconsistency.
bool collinearity_predicate(const CircleTriple& t, const Tolerance& tol = kDefaultTolerance);

TripleReport triple_report(const CircleTriple& t, const Tolerance& tol = kDefaultTolerance);

// Throws NotCollinearError when the predicate fails.
Line lemoine_line_generalized(const CircleTriple& t, const Tolerance& tol = kDefaultTolerance);

// axes[i] is the radical axis of K_{i+1} and K_{i+2}; o is the circumcenter of
// the three centers. Requires the predicate and three real circles.
KRadicalAxes k_radical_axes(const CircleTriple& t, const Tolerance& tol = kDefaultTolerance);

// Power of the circumcenter with respect to K_index (index is 1..3), from the
// closed form r^2 - (k r_b^2 - r_a^2) / (k - 1) where K is the locus
// P_a = k P_b and r is the circumradius.
double circumcenter_power(const CircleTriple& t, int index, const Tolerance& tol = kDefaultTolerance);

}  // namespace apollonius
