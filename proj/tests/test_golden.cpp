#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "apollonius/scene.hpp"

using namespace apollonius::scene;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in) << "missing " << path;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Golden : public ::testing::TestWithParam<const char*> {};

}  // namespace

TEST_P(Golden, ReportAndSvgMatchStoredBytes) {
  const std::string base = std::string(APOLLONIUS_GOLDEN_DIR) + "/" + GetParam();
  const Scene s = parse_scene(slurp(base + ".scene"));
  const Report r = run_scene(s);
  EXPECT_EQ(emit_report(r), slurp(base + ".report"));
  EXPECT_EQ(emit_svg(s, r), slurp(base + ".svg"));
}

INSTANTIATE_TEST_SUITE_P(Scenes, Golden, ::testing::Values("locus", "lemoine", "concurrence"));
