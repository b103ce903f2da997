#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace apollonius::selftest {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;

  bool ok() const { return passed == total; }
};

// Randomized invariant suites over seeded configurations. Same seed, same result.
std::vector<SuiteResult> run(std::uint64_t seed);

// One line per suite and a closing total line.
std::string format(std::uint64_t seed, const std::vector<SuiteResult>& results);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace apollonius::selftest
