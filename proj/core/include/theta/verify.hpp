#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace theta::verify {

struct check_result {
  std::string name;
  std::string anchor;  // short tag naming the identity family under test
  bool passed = false;
  std::string detail;  // failure context; empty on success
  double seconds = 0.0;
};

struct options {
  unsigned n_max = 10;
  bool fast = false;  // restrict to n <= 4, skip the heavy class sums
  std::uint64_t seed = 987654321;
};

// Runs the cross-checks of every module (recurrence vs formula vs
// enumeration, closed forms vs oracles, generating functions vs
// combinatorics, class formulas vs published values).  Streams one line per
// check to `progress` when given.
std::vector<check_result> run(const options& opts,
                              std::ostream* progress = nullptr);

bool all_passed(const std::vector<check_result>& results);

}  // namespace theta::verify
