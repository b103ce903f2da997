#pragma once

#include <optional>

#include "apollonius/geom.hpp"
#include "apollonius/locus.hpp"

namespace apollonius {

// K_A(B, C): the circle of points X with |XB| / |XC| = |AB| / |AC|.
struct ClassicApollonius {
  Locus locus;
  // Center M_A(B, C) and radius r_A(B, C); empty when the locus is a line.
  std::optional<Point> center;
  std::optional<double> radius;
};

// Internal and external division points of BC in the ratio |AB| : |AC|.
struct BisectorFeet {
  Point internal;
  Point external;
};

struct LemoineData {
  Point m_a, m_b, m_c;
  // Isodynamic points, ascending y then x.
  Point s1, s2;
  Point o;
  Line lemoine;
};

// Points X with |XB| = lambda |XC|. Perpendicular bisector of BC when lambda is 1.
// Throws CoincidentPoints, NonpositiveRatio.
Locus classic_ratio_locus(Point b, Point c, double lambda, const Tolerance& tol = kDefaultTolerance);

// Throws CoincidentPoints unless a, b, c are pairwise distinct.
ClassicApollonius classic_apollonius(Point a, Point b, Point c, const Tolerance& tol = kDefaultTolerance);

// Throws IsoscelesDegenerate when |AB| == |AC|, CollinearABC when A is on BC.
BisectorFeet bisector_feet(Point a, Point b, Point c, const Tolerance& tol = kDefaultTolerance);

// Throws DegenerateTriangle, NotScalene, NumericalDegeneracy.
LemoineData lemoine_data(Point a, Point b, Point c, const Tolerance& tol = kDefaultTolerance);

}  // namespace apollonius
