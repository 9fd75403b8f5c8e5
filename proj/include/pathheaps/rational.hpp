#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathheaps/mpoly.hpp"

namespace pathheaps {

// Quotient of two mpoly values.  Fractions are kept unreduced apart from a
// cheap common monomial / integer-content normalisation; equality is decided
// by cross-multiplication.
class rational {
public:
  rational() : num_(mpoly::zero()), den_(mpoly::one()) {}
  rational(mpoly num) : num_(std::move(num)), den_(mpoly::one()) {}
  rational(mpoly num, mpoly den);

  static rational zero() { return rational(); }
  static rational one() { return rational(mpoly::one()); }

  const mpoly& num() const { return num_; }
  const mpoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend rational operator+(const rational& a, const rational& b);
  friend rational operator-(const rational& a, const rational& b);
  friend rational operator*(const rational& a, const rational& b);
  friend rational operator/(const rational& a, const rational& b);
  rational operator-() const;
  rational& operator+=(const rational& o) { return *this = *this + o; }
  rational& operator-=(const rational& o) { return *this = *this - o; }
  rational& operator*=(const rational& o) { return *this = *this * o; }

  friend bool operator==(const rational& a, const rational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  // Exact polynomial form, when the denominator divides the numerator.
  std::optional<mpoly> to_polynomial() const;

  // "num" when the denominator is 1, otherwise "(num) / (den)".
  std::string to_string() const;

private:
  void normalize();
  mpoly num_, den_;
};

// Determinant by cofactor expansion along the first row; the empty matrix
// has determinant 1.  Intended for the small matrices used here (n <= 6).
rational det(const std::vector<std::vector<rational>>& m);

}  // namespace pathheaps
