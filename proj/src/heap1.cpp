#include "pathheaps/heap1.hpp"

#include <algorithm>

namespace pathheaps {

namespace {

// Labels for a general ceiling.  Each column i of the ceiling carries one
// east step, at height h(i); the provisional label is N(U)+1-h(i).  Ties are
// broken by pushing every label to the left of a tie up by one, sweeping
// right to left.  The level labels take y(j) = x-label at the peak column
// plus one at peak levels, and grow by one per level walking down from the
// level above elsewhere.
struct general_labels {
  std::vector<int> provisional;  // before the tie sweep
  std::vector<int> x;            // final x-labels
  std::vector<int> y;            // y[j-1] for level j
};

general_labels compute_general_labels(const lattice_path& ceiling) {
  general_labels g;
  auto h = height_profile(ceiling);
  const int nu = ceiling.ups();
  const int nd = static_cast<int>(h.size());
  g.provisional.resize(h.size());
  for (int i = 0; i < nd; ++i) g.provisional[i] = nu + 1 - h[i];
  g.x = g.provisional;
  for (int i = nd - 2; i >= 0; --i) {
    if (g.x[i] == g.x[i + 1]) {
      for (int j = 0; j <= i; ++j) ++g.x[j];
    }
  }
  g.y.assign(static_cast<std::size_t>(nu), 0);
  for (auto [px, py] : peaks(ceiling)) g.y[py - 1] = g.x[px] + 1;
  for (int j = nu - 1; j >= 1; --j)
    if (g.y[j - 1] == 0) g.y[j - 1] = 1 + g.y[j];
  return g;
}

}  // namespace

label_table make_label_table(const path_family& family) {
  label_table t;
  switch (family.k) {
    case path_family::kind::one_b: {
      const int b = family.param, n = family.n;
      for (int i = 0; i < b * n; ++i) t.x_labels.push_back(b * n - i);
      for (int j = 1; j <= n; ++j) t.y_labels.push_back(b * (n + 1 - j) + 1);
      // Piece lengths cycle b, b-1, ..., 1 along positions 1, 2, ...
      for (int pos = 1; pos <= b * n + 1; ++pos) {
        int rem = (pos - 1) % b + 1;  // position within its block, 1-based
        t.piece_len[pos] = b + 1 - rem;
      }
      break;
    }
    case path_family::kind::a_one: {
      const int a = family.param, n = family.n;
      for (int i = 0; i < n; ++i) t.x_labels.push_back(a * (n - 1 - i) + 1);
      for (int j = 1; j <= a * n; ++j) t.y_labels.push_back(a * n + 2 - j);
      break;  // all pieces have length 1
    }
    case path_family::kind::general: {
      auto g = compute_general_labels(family.ceiling);
      t.x_labels = g.x;
      t.y_labels = g.y;
      // The piece starting at x(i) has length d(i), the multiplicity of the
      // provisional label s'_i among s'_0 .. s'_i.
      for (std::size_t i = 0; i < g.x.size(); ++i) {
        int d = 0;
        for (std::size_t j = 0; j <= i; ++j)
          if (g.provisional[j] == g.provisional[i]) ++d;
        if (d > 1) t.piece_len[g.x[i]] = d;
      }
      break;
    }
  }
  for (int v : t.x_labels) t.max_label = std::max(t.max_label, v);
  for (int v : t.y_labels) t.max_label = std::max(t.max_label, v);
  return t;
}

int max_label(const path_family& family) {
  return make_label_table(family).max_label;
}

heap1 heap1_from_path(const lattice_path& mu, const path_family& family) {
  if (!is_below(mu, family.ceiling))
    fail(errc::not_below, "heap1_from_path: path is not below the ceiling");
  auto t = make_label_table(family);
  heap1 h;
  h.family = family;
  // Peaks left to right have decreasing x-labels; drop order is by
  // increasing left abscissa, i.e. the reverse.
  for (auto [px, py] : peaks(mu))
    h.pieces.push_back({t.x_labels[px], t.y_labels[py - 1]});
  std::reverse(h.pieces.begin(), h.pieces.end());
  return h;
}

void validate_heap1(const heap1& h) {
  auto t = make_label_table(h.family);
  for (std::size_t i = 0; i < h.pieces.size(); ++i) {
    const auto& s = h.pieces[i];
    if (s.l >= s.r) fail(errc::invalid_heap, "heap1: need l < r");
    if (std::find(t.x_labels.begin(), t.x_labels.end(), s.l) ==
        t.x_labels.end())
      fail(errc::invalid_heap, "heap1: left abscissa is not an x-label");
    if (std::find(t.y_labels.begin(), t.y_labels.end(), s.r) ==
        t.y_labels.end())
      fail(errc::invalid_heap, "heap1: right abscissa is not a y-label");
    if (i > 0 && h.pieces[i - 1].l >= s.l)
      fail(errc::invalid_heap, "heap1: lefts must strictly increase");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& o = h.pieces[j];
      bool nested = (o.l <= s.l && s.r <= o.r) || (s.l <= o.l && o.r <= s.r);
      if (nested) fail(errc::invalid_heap, "heap1: nested staircases");
    }
  }
}

lattice_path path_from_heap1(const heap1& h) {
  validate_heap1(h);
  auto t = make_label_table(h.family);
  const int nd = static_cast<int>(t.x_labels.size());
  const int nu = static_cast<int>(t.y_labels.size());
  // Recover the peak coordinates, then rebuild the path.
  std::vector<std::pair<int, int>> pk;
  for (const auto& s : h.pieces) {
    int px = -1, py = -1;
    for (int i = 0; i < nd; ++i)
      if (t.x_labels[i] == s.l) px = i;
    for (int j = 1; j <= nu; ++j)
      if (t.y_labels[j - 1] == s.r) py = j;
    pk.emplace_back(px, py);
  }
  std::sort(pk.begin(), pk.end());
  lattice_path mu;
  int x = 0, y = 0;
  for (auto [px, py] : pk) {
    if (px < x || py <= y)
      fail(errc::invalid_heap, "heap1: peaks do not form a path");
    mu.word += std::string(static_cast<std::size_t>(px - x), 'D');
    mu.word += std::string(static_cast<std::size_t>(py - y), 'U');
    x = px;
    y = py;
  }
  mu.word += std::string(static_cast<std::size_t>(nd - x), 'D');
  mu.word += std::string(static_cast<std::size_t>(nu - y), 'U');
  if (!is_below(mu, h.family.ceiling))
    fail(errc::invalid_heap, "heap1: reconstructed path is not below ceiling");
  return mu;
}

mpoly valuation1(const heap1& h) {
  int span = 0, lefts = 0, rights = 0;
  for (const auto& s : h.pieces) {
    span += s.r - s.l;
    lefts += s.l;
    rights += s.r;
  }
  monomial m;
  m[var::x] = static_cast<int>(h.pieces.size());
  m[var::y] = span;
  m[var::p] = lefts;
  m[var::q] = rights;
  return mpoly::term(m, 1);
}

mpoly gf_type1(const path_family& family, std::int64_t cap) {
  mpoly f;
  paths_below en(family.ceiling, cap);
  while (auto mu = en.next()) f += valuation1(heap1_from_path(*mu, family));
  return f;
}

path_family dual_family(const path_family& family) {
  switch (family.k) {
    case path_family::kind::one_b:
      return path_family::a_one(family.param, family.n);
    case path_family::kind::a_one:
      return path_family::one_b(family.param, family.n);
    default:
      return path_family::general(dual_path(family.ceiling));
  }
}

heap1 eta(const heap1& h) {
  const int m = max_label(h.family) + 1;
  heap1 r;
  r.family = dual_family(h.family);
  for (auto it = h.pieces.rbegin(); it != h.pieces.rend(); ++it)
    r.pieces.push_back({m - it->r, m - it->l});
  return r;
}

bool verify_duality(const path_family& family, std::int64_t cap) {
  const int m = max_label(family) + 1;
  mpoly lhs = gf_type1(family, cap);
  mpoly f_dual = gf_type1(dual_family(family), cap);
  monomial xm;  // x -> p^m q^m x
  xm[var::x] = 1;
  xm[var::p] = m;
  xm[var::q] = m;
  monomial qinv, pinv;
  qinv[var::q] = -1;  // p -> q^-1
  pinv[var::p] = -1;  // q -> p^-1
  std::map<var, std::pair<Int, monomial>> rules{
      {var::x, {1, xm}}, {var::p, {1, qinv}}, {var::q, {1, pinv}}};
  return lhs == f_dual.substitute(rules);
}

}  // namespace pathheaps
