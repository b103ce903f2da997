#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>

#include "apollonius/geom.hpp"
#include "apollonius/locus.hpp"
#include "apollonius/triple.hpp"

// Seeded random configurations for the randomized invariant suites. Every
// generator rejects near-degenerate draws, so callers can assert tight
// tolerances on what comes out.
namespace apollonius::sampling {

// Bit-level conversion from mt19937_64, so draws match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  Point point(double extent) { return {uniform(-extent, extent), uniform(-extent, extent)}; }

 private:
  std::mt19937_64 engine_;
};

struct PairCase {
  Circle c1;
  Circle c2;
  PowerRatio k;
};

// A pair and ratio whose locus is a real circle.
PairCase real_circle_case(Rng& rng);

// A real-circle case whose locus lies inside [-extent, extent]^2 with radius >= min_radius.
PairCase windowed_circle_case(Rng& rng, double extent, double min_radius);

// Circles meeting in fewer than two points, kept away from tangency.
std::pair<Circle, Circle> separated_pair(Rng& rng);

// Circles meeting in exactly two points, kept away from tangency.
std::pair<Circle, Circle> crossing_pair(Rng& rng);

// Pairwise side lengths differ by at least 1% of the longest; area bounded away from zero.
std::array<Point, 3> scalene_triangle(Rng& rng);

// Every draw below has well-separated nonzero powers P_{i+1}(O_i) != P_{i+2}(O_i).
CircleTriple equal_radius_triple(Rng& rng);
CircleTriple equilateral_triple(Rng& rng);
CircleTriple generic_triple(Rng& rng);

}  // namespace apollonius::sampling
