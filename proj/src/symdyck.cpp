#include "pathheaps/symdyck.hpp"

#include <algorithm>
#include <functional>

#include "pathheaps/error.hpp"

namespace pathheaps {

namespace {

int piece_lo(const sym_piece& p) { return p.left; }
int piece_hi(const sym_piece& p) { return p.is_dimer ? p.left + 1 : p.left; }

bool pieces_overlap(const sym_piece& a, const sym_piece& b) {
  return piece_lo(a) <= piece_hi(b) && piece_lo(b) <= piece_hi(a);
}

bool sym_levels_impl(const sym_heap& h, std::vector<int>& level) {
  const std::size_t m = h.pieces.size();
  level.assign(m, 0);
  for (std::size_t r = m; r-- > 0;) {  // drop bottom piece first
    int lv = 1;
    for (std::size_t j = m; j-- > r + 1;)
      if (pieces_overlap(h.pieces[r], h.pieces[j]))
        lv = std::max(lv, level[j] + 1);
    level[r] = lv;
  }
  return true;
}

bool is_valid_sym_heap(const sym_heap& h, std::vector<int>& level) {
  const std::size_t m = h.pieces.size();
  for (const sym_piece& p : h.pieces) {
    if (p.left < 1) return false;
    if (!p.is_dimer && p.left != 1) return false;
  }
  if (m == 0) return true;
  if (h.pieces[0].left != 1) return false;
  sym_levels_impl(h, level);
  // canonical order: level descending, left descending within a level (the
  // order in which the matching bijection opens arches)
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (level[i] < level[i + 1]) return false;
    if (level[i] == level[i + 1] &&
        h.pieces[i].left <= h.pieces[i + 1].left)
      return false;
  }
  // the top piece is the unique maximal one
  for (std::size_t i = 1; i < m; ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < m && !covered; ++j)
      covered = level[j] > level[i] && pieces_overlap(h.pieces[i], h.pieces[j]);
    if (!covered) return false;
  }
  return true;
}

}  // namespace

int sym_heap::point_size() const {
  int s = 0;
  for (const sym_piece& p : pieces) s += p.is_dimer ? 2 : 1;
  return s;
}

std::vector<int> sym_levels(const sym_heap& h) {
  std::vector<int> level;
  if (!is_valid_sym_heap(h, level))
    fail(errc::invalid_heap, "sym_heap: not a canonical semi-pyramid");
  return level;
}

void validate_sym_heap(const sym_heap& h) { (void)sym_levels(h); }

void validate_sym_matching(const sym_matching& c) {
  int open = 0;
  for (char ch : c.word) {
    if (ch == 'u')
      ++open;
    else if (ch == 'd') {
      if (--open < 0)
        fail(errc::invalid_matching, "sym_matching: unmatched closing step");
    } else {
      fail(errc::invalid_matching, "sym_matching: letters must be u or d");
    }
  }
}

std::vector<sym_heap> enumerate_sym_heaps(int point_size, std::int64_t cap) {
  if (point_size < 0)
    fail(errc::invalid_input, "enumerate_sym_heaps: negative size");
  std::vector<sym_heap> out;
  sym_heap cur;
  std::vector<int> level;
  std::function<void(int)> rec = [&](int budget) {
    if (budget == 0) {
      if (is_valid_sym_heap(cur, level)) {
        out.push_back(cur);
        if (static_cast<std::int64_t>(out.size()) > cap)
          fail(errc::enumeration_too_large, "enumerate_sym_heaps: cap hit");
      }
      return;
    }
    cur.pieces.push_back({false, 1});
    rec(budget - 1);
    cur.pieces.pop_back();
    if (budget >= 2)
      for (int l = 1; l <= point_size; ++l) {
        cur.pieces.push_back({true, l});
        rec(budget - 2);
        cur.pieces.pop_back();
      }
  };
  rec(point_size);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<sym_matching> enumerate_matchings(int point_size) {
  std::vector<sym_matching> out;
  std::string w;
  std::function<void(int)> rec = [&](int open) {
    if (static_cast<int>(w.size()) == point_size) {
      out.push_back({w});
      return;
    }
    if (open > 0) {
      w += 'd';
      rec(open - 1);
      w.pop_back();
    }
    w += 'u';
    rec(open + 1);
    w.pop_back();
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

mpoly valuation_sym(const sym_heap& h) {
  validate_sym_heap(h);
  int lefts = 0;
  for (const sym_piece& p : h.pieces) lefts += p.left;
  monomial m;
  m[var::x] = h.piece_size();
  m[var::y] = h.point_size();
  m[var::p] = lefts;
  return mpoly::term(m, 1);
}

namespace {

rational monom(int ey, int ep) {
  monomial m;
  m[var::y] = ey;
  m[var::p] = ep;
  return rational(mpoly::term(m, 1));
}

series times_x(const series& s, const rational& c) {
  series r(s.order());
  for (int i = 1; i <= s.order(); ++i) r.set_coeff(i, c * s.coeff(i - 1));
  return r;
}

// [c_0 x, c_1 x, ...] = 1/(1 - c_0 x/(1 - c_1 x/(1 - ...))); depth = order
// levels suffice since each level contributes at least one power of x.
series continued_fraction(int order, const std::function<rational(int)>& c) {
  series t = series::one(order);
  for (int j = order; j-- > 0;)
    t = series_ratio(series::one(order), series::one(order) - times_x(t, c(j)));
  return t;
}

}  // namespace

series series_a(int order) {
  series a(order);
  for (int n = 0; n <= order; ++n) {
    rational an(mpoly::term(
                    [&] {
                      monomial m;
                      m[var::y] = 2 * n;
                      m[var::p] = n * n;
                      return m;
                    }(),
                    1),
                q_pochhammer(n));
    a.set_coeff(n, n % 2 == 0 ? an : -an);
  }
  return a;
}

series series_b(int order) {
  series a = series_a(order);
  series b(order);
  for (int n = 0; n <= order; ++n) {
    rational an = n % 2 == 0 ? a.coeff(n) : -a.coeff(n);
    rational bn = an;
    if (n >= 1) {
      rational prev = (n - 1) % 2 == 0 ? a.coeff(n - 1) : -a.coeff(n - 1);
      bn += monom(1, n) * prev;
    }
    b.set_coeff(n, n % 2 == 0 ? bn : -bn);
  }
  return b;
}

series gf_sym(int order) {
  return series_ratio(series_a(order).scaled_x(monom(0, 1)), series_b(order));
}

series gf_sym_cf(int order) {
  series t = continued_fraction(
      order + 1, [](int j) { return j == 0 ? monom(1, 1) : monom(2, j); });
  return (t - series::one(order + 1)).divided_by_x(monom(1, 1));
}

series catalan_cf(int order) {
  return continued_fraction(order, [](int j) { return monom(2, j + 1); });
}

namespace {

// Dyck words of size n: n 'u' and n 'd' with every prefix balance >= 0.
void each_dyck_word(int n, const std::function<void(const std::string&)>& fn) {
  std::string w;
  std::function<void(int, int)> rec = [&](int used_u, int open) {
    if (static_cast<int>(w.size()) == 2 * n) {
      fn(w);
      return;
    }
    if (used_u < n) {
      w += 'u';
      rec(used_u + 1, open + 1);
      w.pop_back();
    }
    if (open > 0) {
      w += 'd';
      rec(used_u, open - 1);
      w.pop_back();
    }
  };
  rec(0, 0);
}

// Unit boxes between the word (weakly above the staircase) and (ud)^n.
int dyck_area(const std::string& w) {
  int h = 0, col = 0, a = 0;
  for (char c : w) {
    if (c == 'u')
      ++h;
    else
      a += h - (++col);
  }
  return a;
}

// Number of prime components: returns to balance zero.
int dyck_primes(const std::string& w) {
  int open = 0, primes = 0;
  for (char c : w) {
    open += c == 'u' ? 1 : -1;
    if (open == 0) ++primes;
  }
  return primes;
}

}  // namespace

series catalan_by_area(int order) {
  series s(order);
  for (int n = 0; n <= order; ++n) {
    mpoly c;
    each_dyck_word(n, [&](const std::string& w) {
      monomial m;
      m[var::y] = 2 * n;
      m[var::p] = n + dyck_area(w);
      c += mpoly::term(m, 1);
    });
    s.set_coeff(n, rational(c));
  }
  return s;
}

series gf_by_dyck(int order) {
  series s(order);
  for (int n = 0; n <= order; ++n) {
    mpoly c;
    each_dyck_word(n + 1, [&](const std::string& w) {
      int pr = dyck_primes(w);
      monomial m;
      m[var::y] = n + (n + 1) - pr;
      m[var::p] = n + pr + dyck_area(w) - (n + 1);
      c += mpoly::term(m, 1);
    });
    s.set_coeff(n, rational(c));
  }
  return s;
}

sym_matching heap_to_matching(const sym_heap& h) {
  const std::vector<int> level = sym_levels(h);
  const std::size_t m = h.pieces.size();
  // transitive closure of "overlaps and sits at a higher level"
  std::vector<std::vector<bool>> above(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      above[i][j] =
          level[i] > level[j] && pieces_overlap(h.pieces[i], h.pieces[j]);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (above[i][k] && above[k][j]) above[i][j] = true;
  // the word lists dimer staircases separated by monomers; a dimer belongs
  // to the block below the monomers above it, and a monomer follows the
  // block of dimers it supports.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  auto key = [&](std::size_t i) {
    int monomers_above = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (!h.pieces[j].is_dimer && above[j][i]) ++monomers_above;
    return std::make_tuple(monomers_above, h.pieces[i].is_dimer ? 0 : 1,
                           -level[i], -h.pieces[i].left);
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::string w;
  int open = 0;
  for (std::size_t i : order) {
    const sym_piece& p = h.pieces[i];
    int close = p.is_dimer ? open - (p.left - 1) : open;
    if (close < 0)
      fail(errc::invalid_heap, "heap_to_matching: dimer has no support");
    w.append(static_cast<std::size_t>(close), 'd');
    open -= close;
    w += 'u';
    if (p.is_dimer) ++open;
  }
  w.append(static_cast<std::size_t>(open), 'd');
  return {w};
}

namespace {

// match[i] = closing position for an arch opened at i, -1 for half-arches
// and -2 for closing letters.
std::vector<int> match_positions(const sym_matching& c) {
  validate_sym_matching(c);
  std::vector<int> match(c.word.size(), -1);
  std::vector<int> stack;
  for (std::size_t i = 0; i < c.word.size(); ++i) {
    if (c.word[i] == 'u') {
      stack.push_back(static_cast<int>(i));
    } else {
      match[static_cast<std::size_t>(stack.back())] = static_cast<int>(i);
      match[i] = -2;
      stack.pop_back();
    }
  }
  return match;
}

int enclosing_arches(const std::vector<int>& match, int i, int j) {
  int n = 0;
  for (int a = 0; a < i; ++a)
    if (match[static_cast<std::size_t>(a)] > j) ++n;
  return n;
}

}  // namespace

sym_heap matching_to_heap(const sym_matching& c) {
  auto match = match_positions(c);
  sym_heap h;
  for (int i = 0; i < static_cast<int>(c.word.size()); ++i) {
    if (c.word[static_cast<std::size_t>(i)] != 'u') continue;
    int j = match[static_cast<std::size_t>(i)];
    if (j == -1)
      h.pieces.push_back({false, 1});
    else
      h.pieces.push_back({true, 1 + enclosing_arches(match, i, j)});
  }
  // re-sort the reading order of the word into canonical heap order
  std::vector<int> level;
  sym_levels_impl(h, level);
  std::vector<std::size_t> order(h.pieces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (level[a] != level[b]) return level[a] > level[b];
    return h.pieces[a].left > h.pieces[b].left;
  });
  sym_heap out;
  for (std::size_t i : order) out.pieces.push_back(h.pieces[i]);
  validate_sym_heap(out);
  return out;
}

std::pair<int, int> matching_weight(const sym_matching& c) {
  auto match = match_positions(c);
  int pieces = 0, w = 0;
  for (int i = 0; i < static_cast<int>(c.word.size()); ++i) {
    if (c.word[static_cast<std::size_t>(i)] != 'u') continue;
    ++pieces;
    int j = match[static_cast<std::size_t>(i)];
    w += j == -1 ? 1 : 1 + enclosing_arches(match, i, j);
  }
  return {pieces, w};
}

mpoly gf_by_matchings(int max_points) {
  mpoly g;
  for (int n = 0; n <= max_points; ++n)
    for (const sym_matching& c : enumerate_matchings(n)) {
      auto [pieces, w] = matching_weight(c);
      monomial m;
      m[var::x] = pieces;
      m[var::y] = n;
      m[var::p] = w;
      g += mpoly::term(m, 1);
    }
  return g;
}

lattice_path sym_to_dyck(const sym_matching& mu) {
  auto match = match_positions(mu);
  std::string w = "U";
  for (std::size_t i = 0; i < mu.word.size(); ++i) {
    if (mu.word[i] == 'u' && match[i] == -1)
      w += "DU";
    else
      w += mu.word[i] == 'u' ? 'U' : 'D';
  }
  w += 'D';
  return {w};
}

sym_matching dyck_to_sym(const lattice_path& mu) {
  const std::string& w = mu.word;
  if (w.size() < 2 || w.size() % 2 != 0 || mu.ups() != mu.downs() ||
      w.front() != 'U' || w.back() != 'D')
    fail(errc::invalid_input, "dyck_to_sym: not a Dyck path of size >= 1");
  int open = 0;
  for (char c : w)
    if ((open += c == 'U' ? 1 : -1) < 0)
      fail(errc::invalid_input, "dyck_to_sym: word dips below the axis");
  std::string body = w.substr(1, w.size() - 2);
  std::string out;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == 'D') {
      if (i + 1 >= body.size() || body[i + 1] != 'U')
        fail(errc::invalid_input, "dyck_to_sym: dangling D");
      out += 'u';
      i += 2;
    } else {
      int bal = 0;
      std::size_t j = i;
      do {
        bal += body[j] == 'U' ? 1 : -1;
        out += body[j] == 'U' ? 'u' : 'd';
        ++j;
      } while (j < body.size() && bal > 0);
      if (bal != 0) fail(errc::invalid_input, "dyck_to_sym: unbalanced block");
      i = j;
    }
  }
  sym_matching c{out};
  validate_sym_matching(c);
  return c;
}

}  // namespace pathheaps
