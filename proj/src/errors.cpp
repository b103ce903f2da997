#include "apollonius/errors.hpp"

#include <cstdio>

namespace apollonius {

std::string_view describe(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::CollinearInput: return "collinear input";
    case ErrorCode::IdenticalCircles: return "identical circles";
    case ErrorCode::CoincidentPoints: return "coincident points";
    case ErrorCode::ConcentricCircles: return "concentric circles";
    case ErrorCode::NonpositiveRatio: return "nonpositive ratio";
    case ErrorCode::IsoscelesDegenerate: return "isosceles degenerate";
    case ErrorCode::CollinearABC: return "collinear triangle";
    case ErrorCode::NotScalene: return "not scalene";
    case ErrorCode::DegenerateTriangle: return "degenerate triangle";
    case ErrorCode::NumericalDegeneracy: return "numerical degeneracy";
    case ErrorCode::IndeterminateRatio: return "indeterminate ratio";
    case ErrorCode::InvalidRatio: return "invalid ratio";
    case ErrorCode::DegenerateK: return "degenerate k";
    case ErrorCode::NotCollinear: return "not collinear";
    case ErrorCode::InternalInconsistency: return "internal inconsistency";
    case ErrorCode::WindowTooFine: return "window too fine";
    case ErrorCode::TooFewPoints: return "too few points";
    case ErrorCode::CollinearPoints: return "collinear points";
    case ErrorCode::NothingToRender: return "nothing to render";
  }
  return "unknown error";
}

GeometryError::GeometryError(ErrorCode code)
    : std::runtime_error(std::string(describe(code))), code_(code) {}

GeometryError::GeometryError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(describe(code)) + ": " + detail), code_(code) {}

namespace {

std::string degenerate_k_detail(int index, DegenerateKError::Reason reason) {
  const char* why = "";
  switch (reason) {
    case DegenerateKError::Reason::ZeroPower: why = "center lies on a neighbouring circle"; break;
    case DegenerateKError::Reason::EqualPowers: why = "equal powers give a line locus"; break;
    case DegenerateKError::Reason::NotACircle: why = "locus is not a real circle"; break;
  }
  return "index " + std::to_string(index) + ", " + why;
}

std::string residual_detail(double residual) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "balance residual %.6e", residual);
  return buf;
}

}  // namespace

DegenerateKError::DegenerateKError(int index, Reason reason)
    : GeometryError(ErrorCode::DegenerateK, degenerate_k_detail(index, reason)),
      index_(index),
      reason_(reason) {}

NotCollinearError::NotCollinearError(double balance_residual)
    : GeometryError(ErrorCode::NotCollinear, residual_detail(balance_residual)),
      residual_(balance_residual) {}

}  // namespace apollonius
