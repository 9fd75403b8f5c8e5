#include "pathheaps/series.hpp"

#include <algorithm>

namespace pathheaps {

void series::set_coeff(int i, rational c) {
  if (i < 0 || i > order()) fail(errc::invalid_input, "series: bad index");
  if (c.num().max_exp(var::x) > 0 || c.den().max_exp(var::x) > 0)
    fail(errc::invalid_input, "series: coefficient involves x");
  coeffs_[static_cast<std::size_t>(i)] = std::move(c);
}

series series::truncated(int order) const {
  if (order > this->order())
    fail(errc::invalid_input, "series: cannot extend the order");
  series r(order);
  for (int i = 0; i <= order; ++i) r.coeffs_[i] = coeffs_[i];
  return r;
}

series operator+(const series& a, const series& b) {
  series r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i)
    r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

series operator-(const series& a, const series& b) {
  series r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i)
    r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

series operator*(const series& a, const series& b) {
  series r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    rational c;
    for (int j = 0; j <= i; ++j) c += a.coeffs_[j] * b.coeffs_[i - j];
    r.coeffs_[i] = std::move(c);
  }
  return r;
}

bool operator==(const series& a, const series& b) {
  int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

series series::scaled_x(const rational& c) const {
  series r(order());
  rational f = rational::one();
  for (int i = 0; i <= order(); ++i) {
    r.coeffs_[i] = coeffs_[i] * f;
    f *= c;
  }
  return r;
}

series series::divided_by_x(const rational& c) const {
  if (!coeffs_[0].is_zero())
    fail(errc::invalid_input, "series: constant term must vanish");
  if (c.is_zero()) fail(errc::invalid_input, "series: division by zero");
  series r(order() - 1);
  for (int i = 1; i <= order(); ++i) r.coeffs_[i - 1] = coeffs_[i] / c;
  return r;
}

series series_ratio(const series& a, const series& b) {
  if (b.coeff(0).is_zero())
    fail(errc::non_invertible_constant_term,
         "series_ratio: denominator has zero constant term");
  series q(std::min(a.order(), b.order()));
  for (int i = 0; i <= q.order(); ++i) {
    rational c = a.coeff(i);
    for (int j = 0; j < i; ++j) c -= q.coeff(j) * b.coeff(i - j);
    q.set_coeff(i, c / b.coeff(0));
  }
  return q;
}

}  // namespace pathheaps
