#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathheaps/mpoly.hpp"
#include "pathheaps/rational.hpp"
#include "pathheaps/series.hpp"

using namespace pathheaps;

namespace {

mpoly mono(int ex, int ey, int ep, int eq, Int c = 1) {
  monomial m;
  m[var::x] = ex, m[var::y] = ey, m[var::p] = ep, m[var::q] = eq;
  return mpoly::term(m, c);
}

}  // namespace

TEST_CASE("mpoly arithmetic and canonical form") {
  mpoly a = mpoly::one() + mono(1, 0, 2, 0) + mono(0, 1, 0, -1, -3);
  CHECK(a.to_string() == "1 + -3*y*q^-1 + x*p^2");
  CHECK((a - a).is_zero());
  CHECK((a * mpoly::one()) == a);
  CHECK(mpoly::zero().to_string() == "0");
  CHECK(mono(2, 0, 0, 0).to_string() == "x^2");
  CHECK((mono(1, 0, 0, 0) * mono(0, 0, -2, 0)).to_string() == "x*p^-2");
  CHECK(a.eval_ones() == -1);
  CHECK(a.coeff([] {
    monomial m;
    m[var::x] = 1, m[var::p] = 2;
    return m;
  }()) == 1);
}

TEST_CASE("mpoly pow, shift and exponent ranges") {
  mpoly a = mpoly::one() + mono(0, 0, 1, 0);
  CHECK(a.pow(2).to_string() == "1 + 2*p + p^2");
  CHECK(a.pow(0).is_one());
  CHECK(a.shifted(var::p, -1).to_string() == "p^-1 + 1");
  CHECK(a.min_exp(var::p) == 0);
  CHECK(a.max_exp(var::p) == 1);
  CHECK_FALSE(a.shifted(var::p, -1).is_laurent_free());
}

TEST_CASE("substitution") {
  // x -> p^2 q^2 x, p -> q^-1, q -> p^-1
  monomial xm;
  xm[var::x] = 1, xm[var::p] = 2, xm[var::q] = 2;
  monomial qinv, pinv;
  qinv[var::q] = -1, pinv[var::p] = -1;
  std::map<var, std::pair<Int, monomial>> rules{
      {var::x, {1, xm}}, {var::p, {1, qinv}}, {var::q, {1, pinv}}};
  CHECK(mono(1, 0, 1, 0).substitute(rules).to_string() == "x*p^2*q");
  CHECK(mono(0, 2, 0, 0).substitute(rules).to_string() == "y^2");
  CHECK(mono(1, 0, 0, 0).at_one(var::x).is_one());
}

TEST_CASE("exact division") {
  mpoly num = mono(1, 1, 1, 0) + mono(1, 2, 1, 0);  // xyp(1+y)
  mpoly den = mpoly::one() + mono(0, 1, 0, 0);
  REQUIRE(num.divided_by(den).has_value());
  CHECK(num.divided_by(den)->to_string() == "x*y*p");
  CHECK_FALSE(num.divided_by(mono(0, 0, 1, 0) + mpoly::one()).has_value());
}

TEST_CASE("q-symbols") {
  CHECK(q_pochhammer(0).is_one());
  CHECK(q_pochhammer(1).to_string() == "1 + -p");
  // (p;p)_4 = (p;p)_3 (1 - p^4)
  mpoly want = q_pochhammer(3) * (mpoly::one() - mono(0, 0, 4, 0));
  CHECK(q_pochhammer(4) == want);
  CHECK(q_binomial(4, 2).to_string() == "1 + p + 2*p^2 + p^3 + p^4");
  CHECK(q_binomial(3, 0).is_one());
  CHECK(q_binomial(3, 4).is_zero());
  CHECK(q_binomial(2, 1, true).to_string() == "p^-1 + 1");
  // symmetry [n m] = [n n-m]
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) CHECK(q_binomial(n, m) == q_binomial(n, n - m));
}

TEST_CASE("rational equality and arithmetic") {
  rational half(mpoly::one(), mpoly::constant(2));
  rational quarter(mpoly::one(), mpoly::constant(4));
  CHECK(half == rational(mpoly::constant(2), mpoly::constant(4)));
  CHECK(half * half == quarter);
  CHECK(half + half == rational::one());
  CHECK((half - half).is_zero());
  mpoly p = mono(0, 0, 1, 0);
  rational r(p * p - mpoly::one(), p - mpoly::one());  // (p^2-1)/(p-1)
  CHECK(r == rational(p + mpoly::one()));
  REQUIRE(r.to_polynomial().has_value());
  CHECK(r.to_polynomial()->to_string() == "1 + p");
}

TEST_CASE("series ratio and scaling") {
  // 1/(1-x) = 1 + x + x^2 + ...
  series one = series::one(5);
  series den(5);
  den.set_coeff(0, rational::one());
  den.set_coeff(1, -rational::one());
  series geo = series_ratio(one, den);
  for (int i = 0; i <= 5; ++i) CHECK(geo.coeff(i) == rational::one());
  series scaled = geo.scaled_x(rational(mpoly::constant(2)));
  CHECK(scaled.coeff(3) == rational(mpoly::constant(8)));
  CHECK((geo - one).divided_by_x(rational::one()).coeff(0) == rational::one());
  CHECK(geo * den == one);
}

TEST_CASE("determinant") {
  CHECK(det({}) == rational::one());
  rational p(mono(0, 0, 1, 0));
  CHECK(det({{p}}) == p);
  // [[1, p], [p, p^2]] is singular
  CHECK(det({{rational::one(), p}, {p, p * p}}).is_zero());
  CHECK(det({{rational::one(), p}, {p, p * p + rational::one()}}) ==
        rational::one());
}
