// Runs the full verification suite and prints one pass/fail line per
// criterion; exits non-zero when anything fails.
#include <cstdio>

#include "pathheaps/verify.hpp"

int main() {
  int failures = 0;
  for (const auto& r : pathheaps::run_verify_suite(5)) {
    std::printf("%s: %s (%lld ms)\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.elapsed_ms);
    if (!r.pass) {
      std::printf("    lhs: %s\n    rhs: %s\n", r.lhs.c_str(), r.rhs.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
