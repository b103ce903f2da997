#pragma once

#include "apollonius/geom.hpp"

namespace apollonius {

// |center - a|^2 - radius^2. Negative inside, zero on, positive outside.
inline double power(const Circle& g, Point a) {
  const double r = g.radius();
  return dist2(g.center(), a) - r * r;
}

// Locus of equal power to both circles. Throws ConcentricCircles.
Line radical_axis(const Circle& c1, const Circle& c2, const Tolerance& tol = kDefaultTolerance);

}  // namespace apollonius
