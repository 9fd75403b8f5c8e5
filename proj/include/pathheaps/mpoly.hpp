#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathheaps/error.hpp"

namespace pathheaps {

using Int = boost::multiprecision::cpp_int;

enum class var : int { x = 0, y = 1, p = 2, q = 3 };

// Exponent vector of a monomial in (x, y, p, q).  x and y stay non-negative;
// p and q may carry negative (Laurent) exponents.
struct monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  int& operator[](var v) { return e[static_cast<int>(v)]; }
  int operator[](var v) const { return e[static_cast<int>(v)]; }

  friend auto operator<=>(const monomial&, const monomial&) = default;
};

// Sparse exact polynomial in x, y (ordinary) and p, q (Laurent), with
// arbitrary-precision integer coefficients.  The term map is canonical:
// no explicit zero coefficients are ever stored.
class mpoly {
public:
  mpoly() = default;

  static mpoly zero() { return mpoly{}; }
  static mpoly constant(Int c);
  static mpoly one() { return constant(1); }
  static mpoly term(const monomial& m, Int c);
  static mpoly variable(var v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<monomial, Int>& terms() const { return terms_; }

  // Coefficient of an exact exponent vector (zero if absent).
  Int coeff(const monomial& m) const;

  mpoly& operator+=(const mpoly& o);
  mpoly& operator-=(const mpoly& o);
  mpoly operator-() const;
  friend mpoly operator+(mpoly a, const mpoly& b) { return a += b; }
  friend mpoly operator-(mpoly a, const mpoly& b) { return a -= b; }
  friend mpoly operator*(const mpoly& a, const mpoly& b);
  mpoly& operator*=(const mpoly& o) { return *this = *this * o; }
  friend bool operator==(const mpoly& a, const mpoly& b) {
    return a.terms_ == b.terms_;
  }

  mpoly pow(int n) const;  // n >= 0

  // Multiply by a single monomial v^delta.
  mpoly shifted(var v, int delta) const;

  int min_exp(var v) const;  // 0 for the zero polynomial
  int max_exp(var v) const;

  // True when no p or q exponent is negative.
  bool is_laurent_free() const;

  // Substitute each mapped variable by coeff * monomial; unmapped variables
  // are untouched.  Raising an image to a negative power requires its
  // coefficient to be +-1.  Fails with substitution_makes_negative_xy when a
  // result term would carry a negative x or y exponent.
  mpoly substitute(const std::map<var, std::pair<Int, monomial>>& rules) const;

  // Set one variable to 1 (its exponents are dropped).
  mpoly at_one(var v) const;

  // Sum of all coefficients, i.e. the evaluation at x=y=p=q=1.
  Int eval_ones() const;

  // Exact division: returns the quotient when divisor divides *this, and
  // nullopt otherwise.  Laurent exponents are normalised away internally.
  std::optional<mpoly> divided_by(const mpoly& divisor) const;

  // Canonical text form: terms sorted lexicographically by
  // (e_x, e_y, e_p, e_q) and joined by " + "; unit factors and unit
  // exponents are omitted; negative exponents print as p^-2.
  std::string to_string() const;

private:
  void add_term(const monomial& m, const Int& c);
  std::map<monomial, Int> terms_;
};

inline mpoly operator*(mpoly a, const Int& c) {
  return a * mpoly::constant(c);
}

// q-Pochhammer (p; p)_n = prod_{k=1..n} (1 - p^k).
mpoly q_pochhammer(int n);

// Gaussian binomial coefficient [n m] in the variable p, computed by the
// Pascal-type recurrence [n m] = [n-1 m] + p^{n-m} [n-1 m-1].  Zero when
// m < 0 or m > n.  With inverse_variable set, p is replaced by p^{-1}.
mpoly q_binomial(int n, int m, bool inverse_variable = false);

}  // namespace pathheaps
