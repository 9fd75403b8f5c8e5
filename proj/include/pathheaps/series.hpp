#pragma once

#include <vector>

#include "pathheaps/rational.hpp"

namespace pathheaps {

// Formal power series in x truncated at a fixed order, with rational-function
// coefficients in the remaining variables.  Coefficient i is the coefficient
// of x^i; coefficients themselves must not involve x.
class series {
public:
  explicit series(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) fail(errc::invalid_input, "series: negative order");
  }

  static series one(int order) {
    series s(order);
    s.coeffs_[0] = rational::one();
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const rational& coeff(int i) const { return coeffs_.at(i); }
  void set_coeff(int i, rational c);

  series truncated(int order) const;

  // Arithmetic truncates at the smaller of the two orders.
  friend series operator+(const series& a, const series& b);
  friend series operator-(const series& a, const series& b);
  friend series operator*(const series& a, const series& b);

  // Equality of coefficients up to the smaller order.
  friend bool operator==(const series& a, const series& b);

  // Substitute x -> c * x: coefficient i is multiplied by c^i.
  series scaled_x(const rational& c) const;

  // Divide by the monomial c * x: the constant term must vanish.
  series divided_by_x(const rational& c) const;

private:
  std::vector<rational> coeffs_;
};

// Coefficient-wise quotient a / b; b must have an invertible (non-zero)
// constant term, otherwise fails with non_invertible_constant_term.
series series_ratio(const series& a, const series& b);

}  // namespace pathheaps
