// Command-line front end: scene runner, one-shot locus queries, oracle
// comparison and the seeded selftest.

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "apollonius/classic.hpp"
#include "apollonius/errors.hpp"
#include "apollonius/locus.hpp"
#include "apollonius/oracle.hpp"
#include "apollonius/scene.hpp"
#include "apollonius/selftest.hpp"

namespace {

using namespace apollonius;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitSelftest = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "a,b,c" with exactly n finite numbers.
std::vector<double> numbers(const std::string& text, std::size_t n, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    if (!item.empty() && item.front() == '+') ++first;
    const auto [end, ec] = std::from_chars(first, item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size() || !std::isfinite(v)) {
      throw UsageError(std::string(flag) + ": invalid number '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.size() != n) {
    throw UsageError(std::string(flag) + ": expected " + std::to_string(n) + " comma-separated numbers");
  }
  return out;
}

Circle circle_arg(const std::string& text, const char* flag) {
  const auto v = numbers(text, 3, flag);
  if (v[2] < 0.0) throw UsageError(std::string(flag) + ": negative radius");
  return Circle(Point{v[0], v[1]}, v[2]);
}

Point point_arg(const std::string& text, const char* flag) {
  const auto v = numbers(text, 2, flag);
  return Point{v[0], v[1]};
}

PowerRatio ratio_arg(const std::string& text) {
  try {
    return scene::parse_ratio(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--k: ") + e.what());
  }
}

Tolerance tolerance_arg(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be positive");
  return Tolerance::uniform(tol);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_scene_file(const std::string& path, const std::string& svg_path, double tol) {
  const Tolerance t = tolerance_arg(tol);
  const std::string text = read_file(path);
  scene::Scene s;
  try {
    s = scene::parse_scene(text);
  } catch (const scene::SceneError& e) {
    std::cerr << path << ":" << e.line() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  const scene::Report report = scene::run_scene(s, t);
  std::cout << scene::emit_report(report);
  if (!svg_path.empty()) {
    const std::string svg = scene::emit_svg(s, report);
    std::ofstream out(svg_path, std::ios::binary);
    if (!out || !(out << svg)) {
      std::cerr << "cannot write '" << svg_path << "'\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

void print_verify(const oracle::VerifyReport& rep) {
  std::cout << "analytic: " << to_string(rep.analytic) << "\n"
            << "samples: " << rep.samples << "\n"
            << "max residual: " << scene::format_number(rep.max_residual) << "\n"
            << "scan hits: " << rep.scan_hits << "\n";
  if (rep.fit) {
    std::cout << "fit: center=" << scene::format_point(rep.fit->circle.center())
              << " r=" << scene::format_number(rep.fit->circle.radius())
              << " rms=" << scene::format_number(rep.fit->rms_residual) << "\n"
              << "center error: " << scene::format_number(rep.center_error) << "\n"
              << "radius error: " << scene::format_number(rep.radius_error) << "\n";
  }
  std::cout << "agree: " << (rep.tags_agree ? "yes" : "no") << "\n";
  if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-ratio (generalized Apollonius) loci of circles"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string svg_path;
  double tol = 1e-9;
  auto* run = app.add_subcommand("run", "Run a scene file and print its report");
  run->add_option("scene", scene_path, "Scene file")->required();
  run->add_option("--svg", svg_path, "Also write an SVG drawing to this path");
  run->add_option("--tol", tol, "Absolute and relative tolerance");

  std::string c1_text, c2_text, k_text;
  auto* locus = app.add_subcommand("locus", "Locus of P1(X) = k P2(X)");
  locus->add_option("--c1", c1_text, "cx,cy,r")->required();
  locus->add_option("--c2", c2_text, "cx,cy,r")->required();
  locus->add_option("--k", k_text, "p/q, decimal or inf")->required();
  locus->add_option("--tol", tol, "Absolute and relative tolerance");

  auto* thresholds = app.add_subcommand("thresholds", "Ratios at which the locus is a single point");
  thresholds->add_option("--c1", c1_text, "cx,cy,r")->required();
  thresholds->add_option("--c2", c2_text, "cx,cy,r")->required();
  thresholds->add_option("--tol", tol, "Absolute and relative tolerance");

  std::string a_text, b_text, c_text;
  auto* classic = app.add_subcommand("classic", "Classic Apollonius circle K_A(B, C)");
  classic->add_option("--a", a_text, "x,y")->required();
  classic->add_option("--b", b_text, "x,y")->required();
  classic->add_option("--c", c_text, "x,y")->required();
  classic->add_option("--tol", tol, "Absolute and relative tolerance");

  std::string window_text;
  double step = 0.0;
  auto* verify = app.add_subcommand("verify", "Compare the analytic locus with a brute-force grid scan");
  verify->add_option("--c1", c1_text, "cx,cy,r")->required();
  verify->add_option("--c2", c2_text, "cx,cy,r")->required();
  verify->add_option("--k", k_text, "p/q, decimal or inf")->required();
  verify->add_option("--window", window_text, "x0,x1,y0,y1")->required();
  verify->add_option("--step", step, "Grid spacing")->required();
  verify->add_option("--tol", tol, "Absolute and relative tolerance");

  std::uint64_t seed = 0;
  auto* selftest = app.add_subcommand("selftest", "Run the seeded randomized invariant suites");
  selftest->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return run_scene_file(scene_path, svg_path, tol);

    if (*selftest) {
      const auto results = selftest::run(seed);
      std::cout << selftest::format(seed, results);
      return selftest::all_passed(results) ? kExitOk : kExitSelftest;
    }

    // One-shot subcommands: argument problems exit 1, geometry errors exit 2.
    const Tolerance t = tolerance_arg(tol);
    if (*locus) {
      const Circle c1 = circle_arg(c1_text, "--c1");
      const Circle c2 = circle_arg(c2_text, "--c2");
      const PowerRatio k = ratio_arg(k_text);
      std::cout << scene::format_locus(generalized_locus(c1, c2, k, t)) << "\n";
    } else if (*thresholds) {
      const Circle c1 = circle_arg(c1_text, "--c1");
      const Circle c2 = circle_arg(c2_text, "--c2");
      std::cout << scene::format_thresholds(k_thresholds(c1, c2, t)) << "\n";
    } else if (*classic) {
      const Point a = point_arg(a_text, "--a");
      const Point b = point_arg(b_text, "--b");
      const Point c = point_arg(c_text, "--c");
      std::cout << scene::format_locus(classic_apollonius(a, b, c, t).locus) << "\n";
    } else if (*verify) {
      const Circle c1 = circle_arg(c1_text, "--c1");
      const Circle c2 = circle_arg(c2_text, "--c2");
      const PowerRatio k = ratio_arg(k_text);
      const auto w = numbers(window_text, 4, "--window");
      const oracle::ScanWindow window{w[0], w[1], w[2], w[3], step};
      print_verify(oracle::verify_locus(generalized_locus(c1, c2, k, t), c1, c2, k, window, t));
    }
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
}
