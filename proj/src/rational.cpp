#include "pathheaps/rational.hpp"

#include <algorithm>

namespace pathheaps {

rational::rational(mpoly num, mpoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(errc::invalid_input, "rational: zero denominator");
  normalize();
}

void rational::normalize() {
  if (num_.is_zero()) {
    den_ = mpoly::one();
    return;
  }
  // Strip the common monomial factor and the common integer content.
  monomial shift;
  for (int i = 0; i < 4; ++i) {
    var v = static_cast<var>(i);
    shift[v] = std::min(num_.min_exp(v), den_.min_exp(v));
    if (v == var::x || v == var::y) shift[v] = std::max(shift[v], 0);
  }
  Int content = 0;
  for (const auto& [m, c] : num_.terms())
    content = boost::multiprecision::gcd(content, c);
  for (const auto& [m, c] : den_.terms())
    content = boost::multiprecision::gcd(content, c);
  if (content < 0) content = -content;
  bool flip_sign = den_.terms().rbegin()->second < 0;
  if (shift == monomial{} && content == 1 && !flip_sign) return;
  mpoly scale = mpoly::term(shift, flip_sign ? -content : content);
  auto qn = num_.divided_by(scale);
  auto qd = den_.divided_by(scale);
  num_ = std::move(*qn);
  den_ = std::move(*qd);
}

rational operator+(const rational& a, const rational& b) {
  return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

rational operator-(const rational& a, const rational& b) {
  return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

rational operator*(const rational& a, const rational& b) {
  return rational(a.num_ * b.num_, a.den_ * b.den_);
}

rational operator/(const rational& a, const rational& b) {
  if (b.is_zero()) fail(errc::invalid_input, "rational: division by zero");
  return rational(a.num_ * b.den_, a.den_ * b.num_);
}

rational rational::operator-() const {
  rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::optional<mpoly> rational::to_polynomial() const {
  return num_.divided_by(den_);
}

std::string rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

rational det(const std::vector<std::vector<rational>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(errc::invalid_input, "det: non-square matrix");
  if (n == 0) return rational::one();
  if (n == 1) return m[0][0];
  rational result;
  std::vector<std::vector<rational>> minor(n - 1,
                                           std::vector<rational>(n - 1));
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    rational term = m[0][j] * det(minor);
    result = (j % 2 == 0) ? result + term : result - term;
  }
  return result;
}

}  // namespace pathheaps
