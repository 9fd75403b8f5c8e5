#include "pathheaps/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace pathheaps {

namespace {

const char* var_name(int i) {
  static const char* names[4] = {"x", "y", "p", "q"};
  return names[i];
}

void check_xy(const monomial& m) {
  if (m[var::x] < 0 || m[var::y] < 0)
    fail(errc::substitution_makes_negative_xy,
         "negative exponent on x or y");
}

}  // namespace

mpoly mpoly::constant(Int c) {
  mpoly r;
  if (c != 0) r.terms_.emplace(monomial{}, std::move(c));
  return r;
}

mpoly mpoly::term(const monomial& m, Int c) {
  check_xy(m);
  mpoly r;
  if (c != 0) r.terms_.emplace(m, std::move(c));
  return r;
}

mpoly mpoly::variable(var v, int exp) {
  monomial m;
  m[v] = exp;
  return term(m, 1);
}

bool mpoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == monomial{} &&
         terms_.begin()->second == 1;
}

Int mpoly::coeff(const monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void mpoly::add_term(const monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpoly& mpoly::operator+=(const mpoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

mpoly& mpoly::operator-=(const mpoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

mpoly mpoly::operator-() const {
  mpoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

mpoly operator*(const mpoly& a, const mpoly& b) {
  mpoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      monomial m;
      for (int i = 0; i < 4; ++i) m.e[i] = ma.e[i] + mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

mpoly mpoly::pow(int n) const {
  if (n < 0) fail(errc::invalid_input, "mpoly::pow: negative exponent");
  mpoly r = one();
  mpoly base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

mpoly mpoly::shifted(var v, int delta) const {
  mpoly r;
  for (const auto& [m, c] : terms_) {
    monomial m2 = m;
    m2[v] += delta;
    check_xy(m2);
    r.terms_.emplace(m2, c);
  }
  return r;
}

int mpoly::min_exp(var v) const {
  int r = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m[v] < r) r = m[v];
    first = false;
  }
  return r;
}

int mpoly::max_exp(var v) const {
  int r = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m[v] > r) r = m[v];
    first = false;
  }
  return r;
}

bool mpoly::is_laurent_free() const {
  for (const auto& [m, c] : terms_)
    if (m[var::p] < 0 || m[var::q] < 0) return false;
  return true;
}

mpoly mpoly::substitute(
    const std::map<var, std::pair<Int, monomial>>& rules) const {
  mpoly result;
  for (const auto& [m, c] : terms_) {
    mpoly term_val = mpoly::constant(c);
    monomial residual;
    for (int i = 0; i < 4; ++i) {
      var v = static_cast<var>(i);
      int e = m[v];
      if (e == 0) continue;
      auto it = rules.find(v);
      if (it == rules.end()) {
        residual[v] += e;
        continue;
      }
      const auto& [ic, im] = it->second;
      monomial powered;
      for (int j = 0; j < 4; ++j) powered.e[j] = im.e[j] * e;
      Int cf;
      if (e >= 0) {
        cf = boost::multiprecision::pow(ic, static_cast<unsigned>(e));
      } else {
        if (ic != 1 && ic != -1)
          fail(errc::invalid_input,
               "substitute: negative power of an image with coefficient != +-1");
        cf = (ic == -1 && (e % 2 != 0)) ? Int(-1) : Int(1);
      }
      mpoly factor;
      factor.terms_.emplace(powered, cf);
      term_val *= factor;
    }
    mpoly shifted_val;
    for (const auto& [tm, tc] : term_val.terms_) {
      monomial m2;
      for (int j = 0; j < 4; ++j) m2.e[j] = tm.e[j] + residual.e[j];
      check_xy(m2);
      shifted_val.add_term(m2, tc);
    }
    result += shifted_val;
  }
  return result;
}

mpoly mpoly::at_one(var v) const {
  mpoly r;
  for (const auto& [m, c] : terms_) {
    monomial m2 = m;
    m2[v] = 0;
    r.add_term(m2, c);
  }
  return r;
}

Int mpoly::eval_ones() const {
  Int s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::optional<mpoly> mpoly::divided_by(const mpoly& divisor) const {
  if (divisor.is_zero()) fail(errc::invalid_input, "division by zero");
  if (is_zero()) return zero();
  // Normalise Laurent exponents: an exact quotient of the shifted operands
  // has non-negative p and q exponents, so leading-term division applies.
  const int np = min_exp(var::p), nq = min_exp(var::q);
  const int dp = divisor.min_exp(var::p), dq = divisor.min_exp(var::q);
  mpoly num = shifted(var::p, -np).shifted(var::q, -nq);
  mpoly den = divisor.shifted(var::p, -dp).shifted(var::q, -dq);
  mpoly q;
  mpoly r = num;
  auto lead = [](const mpoly& f) { return *f.terms_.rbegin(); };
  const auto [dm, dc] = lead(den);
  while (!r.is_zero()) {
    const auto [rm, rc] = lead(r);
    monomial qm;
    for (int i = 0; i < 4; ++i) {
      qm.e[i] = rm.e[i] - dm.e[i];
      if (qm.e[i] < 0) return std::nullopt;
    }
    if (rc % dc != 0) return std::nullopt;
    mpoly t;
    t.terms_.emplace(qm, rc / dc);
    q += t;
    r -= t * den;
  }
  return q.shifted(var::p, np - dp).shifted(var::q, nq - dq);
}

std::string mpoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::vector<std::string> parts;
    bool has_vars = m != monomial{};
    if (c == -1 && has_vars) {
      out << "-";
    } else if (!(c == 1 && has_vars)) {
      parts.push_back(c.str());
    }
    for (int i = 0; i < 4; ++i) {
      int e = m.e[i];
      if (e == 0) continue;
      std::string s = var_name(i);
      if (e != 1) s += "^" + std::to_string(e);
      parts.push_back(s);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << "*";
      out << parts[i];
    }
  }
  return out.str();
}

mpoly q_pochhammer(int n) {
  if (n < 0) fail(errc::invalid_input, "q_pochhammer: negative n");
  mpoly r = mpoly::one();
  for (int k = 1; k <= n; ++k)
    r *= mpoly::one() - mpoly::variable(var::p, k);
  return r;
}

mpoly q_binomial(int n, int m, bool inverse_variable) {
  if (m < 0 || m > n || n < 0) return mpoly::zero();
  // Row-by-row Pascal recurrence [n m] = [n-1 m] + p^{n-m} [n-1 m-1].
  std::vector<mpoly> row(static_cast<std::size_t>(m) + 1);
  row[0] = mpoly::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      mpoly next = row[j] + mpoly::variable(var::p, i - j) * row[j - 1];
      row[j] = std::move(next);
    }
  }
  mpoly result = row[m];
  if (inverse_variable) {
    mpoly flipped;
    for (const auto& [mo, c] : result.terms()) {
      monomial m2 = mo;
      m2[var::p] = -m2[var::p];
      flipped += mpoly::term(m2, c);
    }
    return flipped;
  }
  return result;
}

}  // namespace pathheaps
