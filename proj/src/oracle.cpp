#include "apollonius/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "apollonius/errors.hpp"
#include "apollonius/power.hpp"

namespace apollonius::oracle {

namespace {

std::size_t cell_count(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
}

}  // namespace

void ScanWindow::validate() const {
  const bool finite = std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
                      std::isfinite(y_max) && std::isfinite(step);
  if (!finite || !(x_min < x_max) || !(y_min < y_max) || !(step > 0.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "scan window needs x_min < x_max, y_min < y_max, step > 0");
  }
  if ((x_max - x_min) / step > kMaxCellsPerAxis + 1e-9 || (y_max - y_min) / step > kMaxCellsPerAxis + 1e-9) {
    throw GeometryError(ErrorCode::WindowTooFine);
  }
}

std::size_t ScanWindow::cells_x() const { return cell_count(x_min, x_max, step); }
std::size_t ScanWindow::cells_y() const { return cell_count(y_min, y_max, step); }

std::vector<Point> grid_scan(const Circle& c1, const Circle& c2, const PowerRatio& k, const ScanWindow& w) {
  w.validate();
  const std::size_t nx = w.cells_x();
  const std::size_t ny = w.cells_y();

  // Scale both parts so f stays comparable to squared lengths.
  const double m = std::max(std::abs(k.num()), std::abs(k.den()));
  const double num = k.num() / m;
  const double den = k.den() / m;
  const auto f = [&](Point x) { return den * power(c1, x) - num * power(c2, x); };

  double scale = std::max(c1.radius(), c2.radius());
  for (Point corner : {Point{w.x_min, w.y_min}, Point{w.x_max, w.y_min}, Point{w.x_min, w.y_max},
                       Point{w.x_max, w.y_max}}) {
    scale = std::max({scale, dist(corner, c1.center()), dist(corner, c2.center())});
  }
  const double target = 1e-12 * scale * scale;

  const auto refine = [&](Point a, double fa, Point b) {
    Point mid = a;
    for (int it = 0; it < 200; ++it) {
      mid = (a + b) * 0.5;
      if (mid == a || mid == b) break;
      const double fm = f(mid);
      if (std::abs(fm) <= target) break;
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    return mid;
  };

  const auto node = [&](std::size_t i, std::size_t j) {
    return Point{w.x_min + static_cast<double>(i) * w.step, w.y_min + static_cast<double>(j) * w.step};
  };
  const auto fill_row = [&](std::size_t j, std::vector<double>& row) {
    for (std::size_t i = 0; i <= nx; ++i) row[i] = f(node(i, j));
  };
  const auto crosses = [](double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); };

  std::vector<Point> hits;
  std::vector<double> row(nx + 1);
  std::vector<double> next(nx + 1);
  fill_row(0, row);
  for (std::size_t j = 0; j <= ny; ++j) {
    if (j < ny) fill_row(j + 1, next);
    for (std::size_t i = 0; i <= nx; ++i) {
      const Point here = node(i, j);
      if (row[i] == 0.0) hits.push_back(here);
      if (i < nx && crosses(row[i], row[i + 1])) hits.push_back(refine(here, row[i], node(i + 1, j)));
      if (j < ny && crosses(row[i], next[i])) hits.push_back(refine(here, row[i], node(i, j + 1)));
    }
    std::swap(row, next);
  }
  return hits;
}

FitResult fit_circle(std::span<const Point> points, const Tolerance& tol) {
  const std::size_t n = points.size();
  if (n < 3) throw GeometryError(ErrorCode::TooFewPoints);

  Point mean{0.0, 0.0};
  for (Point p : points) mean = mean + p;
  mean = mean / static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (Point p : points) {
    const Point c = p - mean;
    sxx += c.x * c.x;
    syy += c.y * c.y;
    sxy += c.x * c.y;
  }
  const double half_trace = 0.5 * (sxx + syy);
  const double spread = std::hypot(0.5 * (sxx - syy), sxy);
  const double thick = std::sqrt(std::max(half_trace - spread, 0.0));
  const double length = std::sqrt(half_trace + spread);
  if (tol.near_zero(thick, length)) throw GeometryError(ErrorCode::CollinearPoints);

  Eigen::MatrixX3d a(static_cast<Eigen::Index>(n), 3);
  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Point c = points[i] - mean;
    const auto row = static_cast<Eigen::Index>(i);
    a(row, 0) = c.x;
    a(row, 1) = c.y;
    a(row, 2) = 1.0;
    b(row) = -norm2(c);
  }
  const Eigen::Vector3d def = a.colPivHouseholderQr().solve(b);
  const Point center = mean + Point{-0.5 * def(0), -0.5 * def(1)};
  const double r2 = 0.25 * (def(0) * def(0) + def(1) * def(1)) - def(2);
  const double rms = std::sqrt((a * def - b).squaredNorm() / static_cast<double>(n));
  return {Circle(center, std::sqrt(std::max(r2, 0.0))), rms, n};
}

std::vector<Point> sample_locus(const Locus& locus, const ScanWindow& w, std::size_t n) {
  std::vector<Point> out;
  switch (locus.kind()) {
    case LocusKind::RealCircle: {
      const Circle& c = locus.circle();
      for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        out.push_back(c.center() + Point{std::cos(t), std::sin(t)} * c.radius());
      }
      break;
    }
    case LocusKind::Line: {
      const Line& l = locus.line();
      const Point mid{0.5 * (w.x_min + w.x_max), 0.5 * (w.y_min + w.y_max)};
      const Point foot = mid - l.normal() * l.signed_distance(mid);
      const double half = 0.5 * std::hypot(w.x_max - w.x_min, w.y_max - w.y_min);
      for (std::size_t i = 0; i < n; ++i) {
        const double t = n > 1 ? -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
        out.push_back(foot + l.direction() * t);
      }
      break;
    }
    case LocusKind::SinglePoint: out.push_back(locus.point()); break;
    case LocusKind::Empty:
    case LocusKind::WholePlane: break;
  }
  return out;
}

namespace {

bool window_contains(const ScanWindow& w, const Circle& c) {
  const Point m = c.center();
  const double r = c.radius();
  return m.x - r >= w.x_min && m.x + r <= w.x_max && m.y - r >= w.y_min && m.y + r <= w.y_max;
}

}  // namespace

VerifyReport verify_locus(const Locus& analytic, const Circle& c1, const Circle& c2, const PowerRatio& k,
                          const ScanWindow& w, const Tolerance& tol) {
  VerifyReport rep;
  rep.analytic = analytic.kind();

  const std::vector<Point> samples = sample_locus(analytic, w);
  rep.samples = samples.size();
  for (Point x : samples) rep.max_residual = std::max(rep.max_residual, std::abs(ratio_residual(c1, c2, k, x)));

  std::vector<Point> hits;
  try {
    hits = grid_scan(c1, c2, k, w);
  } catch (const GeometryError& e) {
    rep.note = e.what();
    return rep;
  }
  rep.scan_hits = hits.size();

  const double cell = std::sqrt(2.0) * w.step;
  const auto all_within = [&](auto distance_of) {
    return std::all_of(hits.begin(), hits.end(), [&](Point h) { return distance_of(h) <= cell; });
  };

  switch (analytic.kind()) {
    case LocusKind::Empty:
      rep.tags_agree = hits.empty();
      if (!rep.tags_agree) rep.note = "scan found points of an empty locus";
      break;
    case LocusKind::WholePlane:
      rep.tags_agree = hits.size() == (w.cells_x() + 1) * (w.cells_y() + 1);
      if (!rep.tags_agree) rep.note = "scan did not vanish on every node";
      break;
    case LocusKind::SinglePoint: {
      const Point p = analytic.point();
      rep.tags_agree = all_within([&](Point h) { return dist(h, p); });
      if (!rep.tags_agree) rep.note = "scan points away from the single point";
      break;
    }
    case LocusKind::Line: {
      const Line& l = analytic.line();
      rep.tags_agree = all_within([&](Point h) { return point_line_distance(l, h); });
      if (!rep.tags_agree) rep.note = "scan points off the line";
      break;
    }
    case LocusKind::RealCircle: {
      const Circle& c = analytic.circle();
      const bool near = all_within([&](Point h) { return std::abs(dist(h, c.center()) - c.radius()); });
      if (!near) {
        rep.note = "scan points off the circle";
        break;
      }
      if (!window_contains(w, c)) {
        rep.tags_agree = true;
        rep.note = "circle not inside window, fit skipped";
        break;
      }
      if (hits.size() < 3) {
        rep.note = "too few scan points for a fit";
        break;
      }
      try {
        rep.fit = fit_circle(hits, tol);
      } catch (const GeometryError& e) {
        rep.note = e.what();
        break;
      }
      rep.center_error = dist(rep.fit->circle.center(), c.center());
      rep.radius_error = std::abs(rep.fit->circle.radius() - c.radius());
      rep.tags_agree = rep.center_error <= 2.0 * w.step && rep.radius_error <= 2.0 * w.step;
      if (!rep.tags_agree) rep.note = "fitted circle differs beyond grid resolution";
      break;
    }
  }
  return rep;
}

}  // namespace apollonius::oracle
