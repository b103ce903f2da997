#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apollonius/geom.hpp"
#include "apollonius/locus.hpp"

// Brute-force checks of the power-ratio locus that use only the defining
// equation den * P1(X) = num * P2(X), never the closed-form center and radius.
namespace apollonius::oracle {

inline constexpr std::size_t kMaxCellsPerAxis = 4096;

struct ScanWindow {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  double step = 0.0;

  // Throws InvalidArgument for an empty window or a nonpositive step,
  // WindowTooFine beyond kMaxCellsPerAxis cells on either axis.
  void validate() const;
  std::size_t cells_x() const;
  std::size_t cells_y() const;
};

struct FitResult {
  Circle circle;
  double rms_residual = 0.0;
  std::size_t n_points = 0;
};

// Zero crossings of den * P1 - num * P2 along grid edges, each refined by
// bisection. Output is row-major over the grid nodes: for every node, an
// exact zero at the node, then the crossing on its +x edge, then on its +y edge.
std::vector<Point> grid_scan(const Circle& c1, const Circle& c2, const PowerRatio& k, const ScanWindow& w);

// Algebraic (Kasa) fit of x^2 + y^2 + Dx + Ey + F = 0.
// Throws TooFewPoints, CollinearPoints.
FitResult fit_circle(std::span<const Point> points, const Tolerance& tol = kDefaultTolerance);

// n points spread over the locus: uniform angles on a circle, an evenly
// spaced segment across the window for a line.
std::vector<Point> sample_locus(const Locus& locus, const ScanWindow& w, std::size_t n = 64);

struct VerifyReport {
  LocusKind analytic = LocusKind::Empty;
  std::size_t samples = 0;
  double max_residual = 0.0;
  std::size_t scan_hits = 0;
  bool tags_agree = false;
  std::optional<FitResult> fit;
  // Filled when a fit was compared against an analytic circle.
  double center_error = 0.0;
  double radius_error = 0.0;
  std::string note;
};

// Disagreements are reported, never thrown.
VerifyReport verify_locus(const Locus& analytic, const Circle& c1, const Circle& c2, const PowerRatio& k,
                          const ScanWindow& w, const Tolerance& tol = kDefaultTolerance);

}  // namespace apollonius::oracle
