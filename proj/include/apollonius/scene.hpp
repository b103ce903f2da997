#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "apollonius/geom.hpp"
#include "apollonius/locus.hpp"

namespace apollonius::scene {

// Line-oriented scene text:
//
//   # comment
//   circle G1 0 0 1
//   point  A  2 2
//   query locus G1 G2 7/4
//
// Query kinds: power <pid> <cid>, radical <cid> <cid>, locus|classify <cid> <cid> <ratio>,
// thresholds <cid> <cid>, apollonius <pid> <cid> <cid>, classic <pid> <pid> <pid>,
// lemoine|concurrence <cid> <cid> <cid>. A ratio is "p/q", a decimal, or "inf".

class SceneError : public std::runtime_error {
 public:
  enum class Kind { Parse, UnknownId, DuplicateId, NegativeRadius };

  SceneError(Kind kind, int line, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  // 1-based line of the offending statement.
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

struct PowerQuery {
  std::string point, circle;
};
struct RadicalQuery {
  std::string c1, c2;
};
struct LocusQuery {
  std::string c1, c2;
  PowerRatio ratio;
};
struct ClassifyQuery {
  std::string c1, c2;
  PowerRatio ratio;
};
struct ThresholdsQuery {
  std::string c1, c2;
};
struct ApolloniusQuery {
  std::string point, c1, c2;
};
struct ClassicQuery {
  std::string a, b, c;
};
struct LemoineQuery {
  std::string c1, c2, c3;
};
struct ConcurrenceQuery {
  std::string c1, c2, c3;
};

using Query = std::variant<PowerQuery, RadicalQuery, LocusQuery, ClassifyQuery, ThresholdsQuery,
                           ApolloniusQuery, ClassicQuery, LemoineQuery, ConcurrenceQuery>;

struct NamedCircle {
  std::string id;
  Circle circle;
};
struct NamedPoint {
  std::string id;
  Point point;
};

// Definitions keep their input order; SVG output follows it.
struct Scene {
  std::vector<NamedCircle> circles;
  std::vector<NamedPoint> points;
  std::vector<Query> queries;

  const Circle& circle(std::string_view id) const;
  Point point(std::string_view id) const;
};

// Throws SceneError.
Scene parse_scene(std::string_view text);

// "inf", "p/q" or a decimal. Throws std::invalid_argument.
PowerRatio parse_ratio(std::string_view text);

// Geometry attached to a report record for rendering.
struct DrawCircle {
  Circle circle;
};
struct DrawLine {
  Line line;
};
struct DrawPoint {
  Point point;
};
struct DrawMarker {
  Point point;
  std::string label;
};
using Drawable = std::variant<DrawCircle, DrawLine, DrawPoint, DrawMarker>;

struct Record {
  std::string text;
  std::vector<Drawable> drawables;
};

struct Report {
  std::vector<Record> records;
};

// One record per query, in order. Geometry errors become "error: ..." records.
Report run_scene(const Scene& s, const Tolerance& tol = kDefaultTolerance);

// One line per record, trailing newline.
std::string emit_report(const Report& r);

// Throws GeometryError(NothingToRender) for an empty scene.
std::string emit_svg(const Scene& s, const Report& r);

// Fixed 9-decimal rendering used by reports; "-0.000000000" prints as "0.000000000".
std::string format_number(double v);
std::string format_point(Point p);
std::string format_line(const Line& l);
std::string format_locus(const Locus& l);
// "two k-=.. k+=..", "double k=..", "linear k=.." or "none".
std::string format_thresholds(const KThresholds& th);

}  // namespace apollonius::scene
