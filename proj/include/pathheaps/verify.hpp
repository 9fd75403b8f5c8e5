#pragma once

#include <string>
#include <vector>

namespace pathheaps {

// One named consistency check: lhs/rhs are the two compared values in
// canonical text form (summaries for multi-case checks).
struct check_result {
  std::string name;
  bool pass = false;
  std::string lhs, rhs;
  long long elapsed_ms = 0;
};

// Run the whole verification suite.  `order` bounds the series-based
// checks; 5 reproduces the documented grids.
std::vector<check_result> run_verify_suite(int order = 5);

}  // namespace pathheaps
