#include "apollonius/scene.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

#include "apollonius/classic.hpp"
#include "apollonius/errors.hpp"
#include "apollonius/power.hpp"
#include "apollonius/triple.hpp"

namespace apollonius::scene {

SceneError::SceneError(Kind kind, int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

const Circle& Scene::circle(std::string_view id) const {
  for (const auto& c : circles) {
    if (c.id == id) return c.circle;
  }
  throw std::out_of_range("no circle named " + std::string(id));
}

Point Scene::point(std::string_view id) const {
  for (const auto& p : points) {
    if (p.id == id) return p.point;
  }
  throw std::out_of_range("no point named " + std::string(id));
}

namespace {

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return std::nullopt;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

bool valid_id(std::string_view id) {
  if (id.empty() || !std::isalpha(static_cast<unsigned char>(id.front()))) return false;
  return std::all_of(id.begin(), id.end(),
                     [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

std::vector<std::string_view> tokenize(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

class Parser {
 public:
  Scene run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t eol = std::min(text.find('\n', pos), text.size());
      ++line_;
      statement(tokenize(text.substr(pos, eol - pos)));
      pos = eol + 1;
    }
    return std::move(scene_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SceneError(SceneError::Kind::Parse, line_, msg); }

  void expect_args(const std::vector<std::string_view>& tok, std::size_t n, const char* usage) const {
    if (tok.size() != n) fail(std::string("expected: ") + usage);
  }

  double number(std::string_view s) const {
    const auto v = parse_number(s);
    if (!v) fail("invalid number '" + std::string(s) + "'");
    return *v;
  }

  std::string define(std::string_view id) {
    if (!valid_id(id)) fail("invalid identifier '" + std::string(id) + "'");
    if (!ids_.insert(std::string(id)).second) {
      throw SceneError(SceneError::Kind::DuplicateId, line_, "duplicate id '" + std::string(id) + "'");
    }
    return std::string(id);
  }

  std::string circle_ref(std::string_view id) const {
    const bool found = std::any_of(scene_.circles.begin(), scene_.circles.end(),
                                   [&](const NamedCircle& c) { return c.id == id; });
    if (!found) throw SceneError(SceneError::Kind::UnknownId, line_, "no circle named '" + std::string(id) + "'");
    return std::string(id);
  }

  std::string point_ref(std::string_view id) const {
    const bool found = std::any_of(scene_.points.begin(), scene_.points.end(),
                                   [&](const NamedPoint& p) { return p.id == id; });
    if (!found) throw SceneError(SceneError::Kind::UnknownId, line_, "no point named '" + std::string(id) + "'");
    return std::string(id);
  }

  PowerRatio ratio(std::string_view s) const {
    try {
      return parse_ratio(s);
    } catch (const std::exception&) {
      fail("invalid ratio '" + std::string(s) + "'");
    }
  }

  void statement(const std::vector<std::string_view>& tok) {
    if (tok.empty()) return;
    if (tok[0] == "circle") {
      expect_args(tok, 5, "circle <id> <cx> <cy> <r>");
      std::string id = define(tok[1]);
      const Point c{number(tok[2]), number(tok[3])};
      const double r = number(tok[4]);
      if (r < 0.0) throw SceneError(SceneError::Kind::NegativeRadius, line_, "negative radius");
      scene_.circles.push_back({std::move(id), Circle(c, r)});
    } else if (tok[0] == "point") {
      expect_args(tok, 4, "point <id> <x> <y>");
      std::string id = define(tok[1]);
      scene_.points.push_back({std::move(id), Point{number(tok[2]), number(tok[3])}});
    } else if (tok[0] == "query") {
      if (tok.size() < 2) fail("missing query kind");
      scene_.queries.push_back(query(tok));
    } else {
      fail("unknown statement '" + std::string(tok[0]) + "'");
    }
  }

  Query query(const std::vector<std::string_view>& tok) const {
    const std::string_view kind = tok[1];
    if (kind == "power") {
      expect_args(tok, 4, "query power <point> <circle>");
      return PowerQuery{point_ref(tok[2]), circle_ref(tok[3])};
    }
    if (kind == "radical") {
      expect_args(tok, 4, "query radical <circle> <circle>");
      return RadicalQuery{circle_ref(tok[2]), circle_ref(tok[3])};
    }
    if (kind == "locus") {
      expect_args(tok, 5, "query locus <circle> <circle> <ratio>");
      return LocusQuery{circle_ref(tok[2]), circle_ref(tok[3]), ratio(tok[4])};
    }
    if (kind == "classify") {
      expect_args(tok, 5, "query classify <circle> <circle> <ratio>");
      return ClassifyQuery{circle_ref(tok[2]), circle_ref(tok[3]), ratio(tok[4])};
    }
    if (kind == "thresholds") {
      expect_args(tok, 4, "query thresholds <circle> <circle>");
      return ThresholdsQuery{circle_ref(tok[2]), circle_ref(tok[3])};
    }
    if (kind == "apollonius") {
      expect_args(tok, 5, "query apollonius <point> <circle> <circle>");
      return ApolloniusQuery{point_ref(tok[2]), circle_ref(tok[3]), circle_ref(tok[4])};
    }
    if (kind == "classic") {
      expect_args(tok, 5, "query classic <point> <point> <point>");
      return ClassicQuery{point_ref(tok[2]), point_ref(tok[3]), point_ref(tok[4])};
    }
    if (kind == "lemoine") {
      expect_args(tok, 5, "query lemoine <circle> <circle> <circle>");
      return LemoineQuery{circle_ref(tok[2]), circle_ref(tok[3]), circle_ref(tok[4])};
    }
    if (kind == "concurrence") {
      expect_args(tok, 5, "query concurrence <circle> <circle> <circle>");
      return ConcurrenceQuery{circle_ref(tok[2]), circle_ref(tok[3]), circle_ref(tok[4])};
    }
    fail("unknown query kind '" + std::string(kind) + "'");
  }

  Scene scene_;
  std::set<std::string> ids_;
  int line_ = 0;
};

}  // namespace

Scene parse_scene(std::string_view text) { return Parser().run(text); }

PowerRatio parse_ratio(std::string_view text) {
  if (text == "inf") return PowerRatio::infinite();
  const auto slash = text.find('/');
  std::optional<double> num;
  std::optional<double> den = 1.0;
  if (slash == std::string_view::npos) {
    num = parse_number(text);
  } else {
    num = parse_number(text.substr(0, slash));
    den = parse_number(text.substr(slash + 1));
  }
  if (!num || !den) throw std::invalid_argument("invalid ratio '" + std::string(text) + "'");
  if (*num == 0.0 && *den == 0.0) throw std::invalid_argument("ratio 0/0 is undefined");
  return PowerRatio(*num, *den);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("0.", 1) == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_point(Point p) { return "(" + format_number(p.x) + ", " + format_number(p.y) + ")"; }

namespace {

std::string line_body(const Line& l) {
  return "normal=" + format_point(l.normal()) + " offset=" + format_number(l.offset());
}

}  // namespace

std::string format_line(const Line& l) { return "line " + line_body(l); }

std::string format_locus(const Locus& l) {
  switch (l.kind()) {
    case LocusKind::RealCircle:
      return "circle center=" + format_point(l.circle().center()) + " r=" + format_number(l.circle().radius());
    case LocusKind::Line: return format_line(l.line());
    case LocusKind::SinglePoint: return "point " + format_point(l.point());
    case LocusKind::Empty: return "empty";
    case LocusKind::WholePlane: return "plane";
  }
  return "unknown";
}

std::string format_thresholds(const KThresholds& th) {
  if (const auto* two = std::get_if<TwoRoots>(&th)) {
    return "two k-=" + format_number(two->k_minus) + " k+=" + format_number(two->k_plus);
  }
  if (const auto* dbl = std::get_if<DoubleRoot>(&th)) return "double k=" + format_number(dbl->k);
  if (const auto* lin = std::get_if<LinearCase>(&th)) return "linear k=" + format_number(lin->k);
  return "none";
}

namespace {

void draw_locus(const Locus& l, std::vector<Drawable>& out) {
  switch (l.kind()) {
    case LocusKind::RealCircle: out.push_back(DrawCircle{l.circle()}); break;
    case LocusKind::Line: out.push_back(DrawLine{l.line()}); break;
    case LocusKind::SinglePoint: out.push_back(DrawPoint{l.point()}); break;
    case LocusKind::Empty:
    case LocusKind::WholePlane: break;
  }
}

std::string format_ratio(const PowerRatio& k) { return format_number(k.num()) + ":" + format_number(k.den()); }

struct Runner {
  const Scene& s;
  const Tolerance& tol;

  Record operator()(const PowerQuery& q) const {
    return {"power: " + format_number(power(s.circle(q.circle), s.point(q.point))), {}};
  }

  Record operator()(const RadicalQuery& q) const {
    const Line l = radical_axis(s.circle(q.c1), s.circle(q.c2), tol);
    return {"radical: " + format_line(l), {DrawLine{l}}};
  }

  Record operator()(const LocusQuery& q) const {
    const Locus l = generalized_locus(s.circle(q.c1), s.circle(q.c2), q.ratio, tol);
    Record r{"locus: " + format_locus(l), {}};
    draw_locus(l, r.drawables);
    return r;
  }

  Record operator()(const ClassifyQuery& q) const {
    return {"classify: " + std::string(to_string(classify(s.circle(q.c1), s.circle(q.c2), q.ratio, tol))), {}};
  }

  Record operator()(const ThresholdsQuery& q) const {
    const KThresholds th = k_thresholds(s.circle(q.c1), s.circle(q.c2), tol);
    const std::string text = "thresholds: " + format_thresholds(th);
    return {text, {}};
  }

  Record operator()(const ApolloniusQuery& q) const {
    const Circle& c1 = s.circle(q.c1);
    const Circle& c2 = s.circle(q.c2);
    const PowerRatio k = power_ratio_of_point(s.point(q.point), c1, c2, tol);
    const Locus l = generalized_locus(c1, c2, k, tol);
    Record r{"apollonius: k=" + format_ratio(k) + " " + format_locus(l), {}};
    draw_locus(l, r.drawables);
    return r;
  }

  Record operator()(const ClassicQuery& q) const {
    const ClassicApollonius k = classic_apollonius(s.point(q.a), s.point(q.b), s.point(q.c), tol);
    Record r{"classic: " + format_locus(k.locus), {}};
    draw_locus(k.locus, r.drawables);
    return r;
  }

  CircleTriple triple(const std::string& a, const std::string& b, const std::string& c) const {
    return CircleTriple(s.circle(a), s.circle(b), s.circle(c), tol);
  }

  Record operator()(const LemoineQuery& q) const {
    const CircleTriple t = triple(q.c1, q.c2, q.c3);
    const TripleReport rep = triple_report(t, tol);
    Record r;
    r.text = "lemoine: m1=" + format_point(rep.m[0]) + " m2=" + format_point(rep.m[1]) +
             " m3=" + format_point(rep.m[2]) + " menelaus=" + format_number(rep.menelaus) +
             " balance=" + format_number(rep.balance_lhs) + "," + format_number(rep.balance_rhs) +
             " collinear=" + (rep.collinear ? "yes" : "no");
    for (const Locus& k : rep.k_circles) draw_locus(k, r.drawables);
    if (rep.collinear) {
      const Line l = lemoine_line_generalized(t, tol);
      r.text += " " + format_line(l);
      r.drawables.push_back(DrawLine{l});
    }
    return r;
  }

  Record operator()(const ConcurrenceQuery& q) const {
    const CircleTriple t = triple(q.c1, q.c2, q.c3);
    const KRadicalAxes axes = k_radical_axes(t, tol);
    const TripleReport rep = triple_report(t, tol);
    Record r;
    r.text = "concurrence: o=" + format_point(axes.o);
    for (int i = 0; i < 3; ++i) r.text += " l" + std::to_string(i + 1) + "=[" + line_body(axes.axes[i]) + "]";
    r.text += " power=";
    for (int i = 1; i <= 3; ++i) r.text += (i > 1 ? "," : "") + format_number(circumcenter_power(t, i, tol));
    for (const Locus& k : rep.k_circles) draw_locus(k, r.drawables);
    r.drawables.push_back(DrawLine{axes.axes[0]});
    r.drawables.push_back(DrawMarker{axes.o, "O"});
    return r;
  }
};

}  // namespace

Report run_scene(const Scene& s, const Tolerance& tol) {
  Report report;
  const Runner runner{s, tol};
  for (const Query& q : s.queries) {
    try {
      report.records.push_back(std::visit(runner, q));
    } catch (const GeometryError& e) {
      report.records.push_back({"error: " + std::string(describe(e.code())), {}});
    }
  }
  return report;
}

std::string emit_report(const Report& r) {
  std::string out;
  for (const Record& rec : r.records) {
    out += rec.text;
    out += '\n';
  }
  return out;
}

}  // namespace apollonius::scene
