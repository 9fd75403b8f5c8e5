#include "pathheaps/qseries.hpp"

#include "pathheaps/heap2.hpp"
#include "pathheaps/path.hpp"

namespace pathheaps {

namespace {

rational p_power(int e) { return rational(mpoly::variable(var::p, e)); }

// Multiply by c * x.
series times_x(const series& s, const rational& c) {
  series r(s.order());
  for (int i = 1; i <= s.order(); ++i) r.set_coeff(i, c * s.coeff(i - 1));
  return r;
}

}  // namespace

rational trivial_heap_term(int k, int n) {
  if (n < 0) fail(errc::invalid_input, "trivial_heap_term: negative n");
  if (n == 0) return rational::one();
  int e = n + (k + 1) * n * (n - 1) / 2;
  return rational(mpoly::variable(var::p, e), q_pochhammer(n));
}

series trivial_series(int k, int order) {
  series t(order);
  for (int n = 0; n <= order; ++n) {
    rational c = trivial_heap_term(k, n);
    t.set_coeff(n, n % 2 == 0 ? c : -c);
  }
  return t;
}

// T(px)/T(x) = 1 + px * (area-normalised series); see gf_fuss_catalan.
static series trivial_ratio(int k, int order) {
  series t = trivial_series(k, order);
  return series_ratio(t.scaled_x(p_power(1)), t);
}

series gf_fuss_catalan(int k, int order) {
  series r = trivial_ratio(k, order + 1) - series::one(order + 1);
  return r.divided_by_x(p_power(1));
}

series gf_fuss_catalan_by_area(int k, int order, std::int64_t cap) {
  series s(order);
  for (int n = 0; n <= order; ++n) {
    auto fam = path_family::one_b(k, n);
    mpoly c;
    for (const auto& mu : paths_below_all(fam.ceiling, cap))
      c += mpoly::variable(var::p, n + area(mu, fam.ceiling));
    s.set_coeff(n, rational(c));
  }
  return s;
}

bool check_functional_equation(int k, int order) {
  // The equation is satisfied by the undivided ratio R = 1 + px G.
  series r = trivial_ratio(k, order);
  series prod = series::one(order);
  for (int j = 0; j <= k; ++j) prod = prod * r.scaled_x(p_power(j));
  series rhs = series::one(order) + times_x(prod, p_power(1));
  return r == rhs;
}

bool heap_sum_check(int k, int max_pieces) {
  // Heaps of m pieces match the x^m coefficient of px G: the top piece is
  // forced, so m pieces encode a size m-1 path.
  series rhs = trivial_ratio(k, max_pieces);
  for (int m = 1; m <= max_pieces; ++m) {
    std::vector<int> lengths(static_cast<std::size_t>(m), k);
    if (!(rational(gf_g(lengths)) == rhs.coeff(m))) return false;
  }
  return true;
}

}  // namespace pathheaps
