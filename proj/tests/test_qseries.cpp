#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathheaps/qseries.hpp"

using namespace pathheaps;

TEST_CASE("trivial heap terms") {
  CHECK(trivial_heap_term(2, 0) == rational::one());
  // n = 1: p / (1 - p)
  monomial pm;
  pm[var::p] = 1;
  CHECK(trivial_heap_term(2, 1) ==
        rational(mpoly::term(pm, 1), q_pochhammer(1)));
  // exponent n + (k+1) n(n-1)/2 = 5 for k = 2, n = 2
  monomial p5;
  p5[var::p] = 5;
  CHECK(trivial_heap_term(2, 2) ==
        rational(mpoly::term(p5, 1), q_pochhammer(2)));
}

TEST_CASE("area series examples") {
  series g = gf_fuss_catalan(2, 3);
  // coefficient of x: p(1 + p + p^2)
  CHECK(g.coeff(1).to_polynomial()->to_string() == "p + p^2 + p^3");
  // coefficient of x^2 evaluated at p = 1 counts the 12 paths
  CHECK(g.coeff(2).to_polynomial()->eval_ones() == 12);
  CHECK(g.coeff(0) == rational::one());
}

TEST_CASE("Fuss-Catalan numbers at p = 1") {
  // k = 1 gives the Catalan numbers 2, 5, 14, 42 shifted by one index
  series c = gf_fuss_catalan(1, 4);
  std::vector<int> want = {2, 5, 14, 42};
  for (int n = 1; n <= 4; ++n)
    CHECK(c.coeff(n).to_polynomial()->eval_ones() == want[n - 1]);
}

TEST_CASE("ratio equals direct area enumeration") {
  for (int k = 1; k <= 3; ++k)
    CHECK(gf_fuss_catalan(k, 4) == gf_fuss_catalan_by_area(k, 4));
}

TEST_CASE("functional equation") {
  for (int k = 1; k <= 3; ++k) CHECK(check_functional_equation(k, 6));
}

TEST_CASE("heap sums match the normalized series") {
  CHECK(heap_sum_check(1, 5));
  CHECK(heap_sum_check(2, 4));
}
