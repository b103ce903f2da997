#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>

#include "apollonius/errors.hpp"
#include "apollonius/scene.hpp"

namespace apollonius::scene {

namespace {

constexpr double kPixelWidth = 800.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("0.", 1) == std::string::npos) s.erase(0, 1);
  return s;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  bool empty() const { return x0 > x1; }
  void add(Point p, double r = 0.0) {
    x0 = std::min(x0, p.x - r);
    x1 = std::max(x1, p.x + r);
    y0 = std::min(y0, p.y - r);
    y1 = std::max(y1, p.y + r);
  }
};

// Drawing surface with y pointing down; every emitted coordinate is (x, -y).
class Canvas {
 public:
  explicit Canvas(const Box& world) {
    const double span = std::max(world.x1 - world.x0, world.y1 - world.y0);
    const double pad = span > 0.0 ? 0.1 * span : 1.0;
    x0_ = world.x0 - pad;
    x1_ = world.x1 + pad;
    y0_ = world.y0 - pad;
    y1_ = world.y1 + pad;
    unit_ = (x1_ - x0_) / kPixelWidth;
  }

  std::string header() const {
    const double height_px = std::round(kPixelWidth * (y1_ - y0_) / (x1_ - x0_));
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(kPixelWidth) + "\" height=\"" + num(height_px) + "\" viewBox=\"" + num(x0_) + " " + num(-y1_) +
           " " + num(x1_ - x0_) + " " + num(y1_ - y0_) + "\">\n";
  }

  std::string circle(const Circle& c, bool dashed) const {
    std::string s = "  <circle cx=\"" + num(c.center().x) + "\" cy=\"" + num(-c.center().y) + "\" r=\"" +
                    num(c.radius()) + "\" fill=\"none\" stroke=\"" + (dashed ? "#c0392b" : "#1f3a93") +
                    "\" stroke-width=\"" + num(unit_) + "\"";
    if (dashed) s += " stroke-dasharray=\"" + num(6 * unit_) + " " + num(4 * unit_) + "\"";
    return s + "/>\n";
  }

  std::string dot(Point p) const {
    return "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) + "\" r=\"" + num(2 * unit_) +
           "\" fill=\"#000000\"/>\n";
  }

  std::string label(Point p, const std::string& text) const {
    return "  <text x=\"" + num(p.x + 3 * unit_) + "\" y=\"" + num(-p.y - 3 * unit_) + "\" font-size=\"" +
           num(12 * unit_) + "\" font-family=\"sans-serif\">" + text + "</text>\n";
  }

  std::string marker(Point p) const {
    const double a = 4 * unit_;
    const double x = p.x;
    const double y = -p.y;
    return "  <path d=\"M " + num(x - a) + " " + num(y) + " L " + num(x + a) + " " + num(y) + " M " + num(x) +
           " " + num(y - a) + " L " + num(x) + " " + num(y + a) + "\" stroke=\"#27ae60\" stroke-width=\"" +
           num(unit_) + "\"/>\n";
  }

  // Clipped to the view box; nothing when the line misses it.
  std::optional<std::string> line(const Line& l) const {
    const Point a = l.anchor();
    const Point d = l.direction();
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    const auto clip = [&](double origin, double dir, double lo, double hi) {
      if (dir == 0.0) return origin >= lo && origin <= hi;
      double ta = (lo - origin) / dir;
      double tb = (hi - origin) / dir;
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      return true;
    };
    if (!clip(a.x, d.x, x0_, x1_) || !clip(a.y, d.y, y0_, y1_) || !(t0 < t1)) return std::nullopt;
    const Point p = a + d * t0;
    const Point q = a + d * t1;
    return "  <line x1=\"" + num(p.x) + "\" y1=\"" + num(-p.y) + "\" x2=\"" + num(q.x) + "\" y2=\"" + num(-q.y) +
           "\" stroke=\"#8e44ad\" stroke-width=\"" + num(unit_) + "\"/>\n";
  }

 private:
  double x0_, x1_, y0_, y1_;
  double unit_;
};

}  // namespace

std::string emit_svg(const Scene& s, const Report& r) {
  Box box;
  bool anything = false;
  for (const auto& c : s.circles) {
    box.add(c.circle.center(), c.circle.radius());
    anything = true;
  }
  for (const auto& p : s.points) {
    box.add(p.point);
    anything = true;
  }
  for (const Record& rec : r.records) {
    for (const Drawable& d : rec.drawables) {
      anything = true;
      if (const auto* c = std::get_if<DrawCircle>(&d)) box.add(c->circle.center(), c->circle.radius());
      if (const auto* p = std::get_if<DrawPoint>(&d)) box.add(p->point);
      if (const auto* m = std::get_if<DrawMarker>(&d)) box.add(m->point);
    }
  }
  if (!anything) throw GeometryError(ErrorCode::NothingToRender);
  if (box.empty()) box.add(Point{0.0, 0.0});

  const Canvas canvas(box);
  std::string out = canvas.header();
  for (const auto& c : s.circles) out += canvas.circle(c.circle, false);
  for (const auto& p : s.points) {
    out += canvas.dot(p.point);
    out += canvas.label(p.point, p.id);
  }
  for (const Record& rec : r.records) {
    for (const Drawable& d : rec.drawables) {
      if (const auto* c = std::get_if<DrawCircle>(&d)) {
        out += canvas.circle(c->circle, true);
      } else if (const auto* l = std::get_if<DrawLine>(&d)) {
        if (auto el = canvas.line(l->line)) out += *el;
      } else if (const auto* p = std::get_if<DrawPoint>(&d)) {
        out += canvas.dot(p->point);
      } else if (const auto* m = std::get_if<DrawMarker>(&d)) {
        out += canvas.marker(m->point);
        out += canvas.label(m->point, m->label);
      }
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace apollonius::scene
