#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "measmean/interval_set.hpp"

namespace measmean {

/// Outcome of one named property suite. The witness describes the first
/// failing case, with sets written in set-expression syntax.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string witness;

  bool pass() const { return failures == 0 && cases > 0; }
};

std::vector<std::string> suite_names();

/// Runs `cases` random cases of the named suite. Deterministic for a
/// given seed. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, int cases, std::uint64_t seed);

/// "[a, b] U [c, d]" with round-tripping numbers.
std::string describe(const IntervalSet& h);

}  // namespace measmean
