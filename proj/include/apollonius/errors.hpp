#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apollonius {

enum class ErrorCode {
  InvalidArgument,
  CollinearInput,
  IdenticalCircles,
  CoincidentPoints,
  ConcentricCircles,
  NonpositiveRatio,
  IsoscelesDegenerate,
  CollinearABC,
  NotScalene,
  DegenerateTriangle,
  NumericalDegeneracy,
  IndeterminateRatio,
  InvalidRatio,
  DegenerateK,
  NotCollinear,
  InternalInconsistency,
  WindowTooFine,
  TooFewPoints,
  CollinearPoints,
  NothingToRender,
};

// Short lowercase phrase used in report records ("error: <phrase>").
std::string_view describe(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(ErrorCode code);
  GeometryError(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// K_{O_i}(G_{i+1}, G_{i+2}) of a circle triple is not a usable circle.
class DegenerateKError : public GeometryError {
 public:
  enum class Reason { ZeroPower, EqualPowers, NotACircle };

  DegenerateKError(int index, Reason reason);

  // 1-based, matching the usual O_1, O_2, O_3 labels.
  int index() const noexcept { return index_; }
  Reason reason() const noexcept { return reason_; }

 private:
  int index_;
  Reason reason_;
};

class NotCollinearError : public GeometryError {
 public:
  explicit NotCollinearError(double balance_residual);

  // lhs - rhs of the collinearity balance.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace apollonius
