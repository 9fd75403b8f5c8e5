#include "pathheaps/heap2.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace pathheaps {

void validate_heap2(const heap2& h) {
  const std::size_t r = h.lengths.size();
  if (h.lefts.size() != r)
    fail(errc::invalid_heap, "heap2: lengths/lefts size mismatch");
  if (r == 0) return;
  if (h.lefts[0] != 1)
    fail(errc::invalid_heap, "heap2: top piece must start at abscissa 1");
  for (std::size_t i = 0; i < r; ++i) {
    if (h.lengths[i] < 0 || h.lefts[i] < 1)
      fail(errc::invalid_heap, "heap2: bad length or left abscissa");
    if (i > 0 && h.lefts[i] > h.lefts[i - 1] + h.lengths[i - 1])
      fail(errc::invalid_heap,
           "heap2: piece starts right of the piece above it");
  }
}

heap2 heap2_from_pair(const lattice_path& mu0, const lattice_path& mu) {
  if (!is_below(mu, mu0))
    fail(errc::not_below, "heap2_from_pair: path is not below the ceiling");
  heap2 h;
  h.lengths = a_sequence(mu0);
  const int r = static_cast<int>(h.lengths.size());
  auto b = b_sequence(mu);
  auto b0 = b_sequence(mu0);
  h.lefts.assign(static_cast<std::size_t>(r), 1);
  for (int i = 1; i < r; ++i)
    h.lefts[i] = b[static_cast<std::size_t>(r - 1 - i)] -
                 b0[static_cast<std::size_t>(r - 1 - i)] + 1;
  validate_heap2(h);
  return h;
}

lattice_path pair_from_heap2(const heap2& h, const lattice_path& mu0) {
  validate_heap2(h);
  // The bottom length never constrains a heap, and the uniform-length
  // convention pads it to b where the skew row has length 1; compare all
  // entries but the last.
  auto a = a_sequence(mu0);
  bool len_ok = a.size() == h.lengths.size();
  for (std::size_t i = 0; len_ok && i + 1 < a.size(); ++i)
    len_ok = a[i] == h.lengths[i];
  if (!len_ok)
    fail(errc::mismatch, "pair_from_heap2: lengths do not match the ceiling");
  const int r = static_cast<int>(h.lengths.size());
  auto b0 = b_sequence(mu0);
  std::vector<int> b(static_cast<std::size_t>(r) - 1);
  for (int i = 1; i < r; ++i)
    b[static_cast<std::size_t>(r - 1 - i)] =
        h.lefts[static_cast<std::size_t>(i)] - 1 +
        b0[static_cast<std::size_t>(r - 1 - i)];
  lattice_path mu;
  int x = 0;
  for (int bi : b) {
    if (bi < x) fail(errc::invalid_heap, "pair_from_heap2: b not monotone");
    mu.word += std::string(static_cast<std::size_t>(bi - x), 'D');
    mu.word += 'U';
    x = bi;
  }
  mu.word += std::string(static_cast<std::size_t>(mu0.downs() - x), 'D');
  if (!is_below(mu, mu0))
    fail(errc::invalid_heap, "pair_from_heap2: result is not below ceiling");
  return mu;
}

mpoly valuation2(const heap2& h) {
  int lefts = std::accumulate(h.lefts.begin(), h.lefts.end(), 0);
  return mpoly::variable(var::p, lefts);
}

namespace {

// Visit the lefts of every heap with the given lengths.
void for_each_heap(const std::vector<int>& lengths,
                   const std::function<void(const std::vector<int>&)>& fn) {
  const std::size_t r = lengths.size();
  std::vector<int> lefts(r, 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      fn(lefts);
      return;
    }
    int hi = lefts[i - 1] + lengths[i - 1];
    for (int c = 1; c <= hi; ++c) {
      lefts[i] = c;
      rec(i + 1);
    }
  };
  if (r == 0)
    fn(lefts);
  else
    rec(1);
}

mpoly from_p_exponents(const std::map<int, Int>& hist) {
  mpoly f;
  for (const auto& [e, c] : hist) f += mpoly::variable(var::p, e) * c;
  return f;
}

}  // namespace

mpoly gf_g(const std::vector<int>& lengths) {
  if (lengths.empty()) return mpoly::one();
  std::map<int, Int> hist;
  for_each_heap(lengths, [&](const std::vector<int>& lefts) {
    ++hist[std::accumulate(lefts.begin(), lefts.end(), 0)];
  });
  return from_p_exponents(hist);
}

mpoly gf_g_k(const std::vector<int>& lengths, int k) {
  if (lengths.empty()) return mpoly::zero();
  if (lengths.size() == 1)
    return k == 1 + lengths[0] ? mpoly::variable(var::p, 1) : mpoly::zero();
  std::map<int, Int> hist;
  for_each_heap(lengths, [&](const std::vector<int>& lefts) {
    int max_right = 0;
    for (std::size_t i = 1; i < lefts.size(); ++i)
      max_right = std::max(max_right, lefts[i] + lengths[i]);
    if (max_right == k)
      ++hist[std::accumulate(lefts.begin(), lefts.end(), 0)];
  });
  return from_p_exponents(hist);
}

mpoly gf_g_tilde(const std::vector<int>& lengths, int k) {
  const int r = static_cast<int>(lengths.size());
  if (r == 0) fail(errc::invalid_input, "gf_g_tilde: empty length sequence");
  // tilde(r', k'): heaps on the first r' lengths whose bottom piece ends at
  // abscissa k'; the top piece is pinned, and the left abscissa of each
  // piece is weakly left of the right end of the piece above.
  std::map<std::pair<int, int>, mpoly> memo;
  std::function<const mpoly&(int, int)> tilde = [&](int rr,
                                                    int kk) -> const mpoly& {
    auto it = memo.find({rr, kk});
    if (it != memo.end()) return it->second;
    mpoly v;
    int topmost = 1 + std::accumulate(lengths.begin(), lengths.begin() + rr, 0);
    int a_r = lengths[static_cast<std::size_t>(rr) - 1];
    if (kk - a_r >= 1 && kk <= topmost) {
      if (rr == 1) {
        if (kk == 1 + a_r) v = mpoly::variable(var::p, 1);
      } else {
        mpoly sum;
        int prefix_top = topmost - a_r;
        for (int j = kk - a_r; j <= prefix_top; ++j) sum += tilde(rr - 1, j);
        v = mpoly::variable(var::p, kk - a_r) * sum;
      }
    }
    return memo.emplace(std::pair{rr, kk}, std::move(v)).first->second;
  };
  return tilde(r, k);
}

mpoly lgv_weight(int i, int j, const std::vector<int>& lengths) {
  auto prefix = [&](int upto) {
    return std::accumulate(lengths.begin(), lengths.begin() + upto, 0);
  };
  // The binomial vanishes on its own when e_j is out of reach on the right;
  // only j >= i - 1 needs an explicit cut (no south steps).
  if (j < i - 1) return mpoly::zero();
  mpoly w = q_binomial(1 + prefix(i), j - i + 1, /*inverse_variable=*/true);
  if (j > i) w = w * mpoly::variable(var::p, -(j - i) * (j - i + 1) / 2);
  return w;
}

namespace {

int d_of(const std::vector<int>& lengths) {
  const int r = static_cast<int>(lengths.size());
  int d = 0;
  for (int j = 1; j <= r - 1; ++j)
    d += (r - j) * lengths[static_cast<std::size_t>(j) - 1];
  return d;
}

}  // namespace

mpoly gf_g_det(const std::vector<int>& lengths) {
  const int r = static_cast<int>(lengths.size());
  if (r == 0) return mpoly::one();
  if (r == 1) return mpoly::variable(var::p, 1);
  std::vector<std::vector<rational>> m(
      static_cast<std::size_t>(r) - 1,
      std::vector<rational>(static_cast<std::size_t>(r) - 1));
  for (int i = 1; i <= r - 1; ++i)
    for (int j = 1; j <= r - 1; ++j)
      m[i - 1][j - 1] = rational(lgv_weight(i, j, lengths));
  rational result =
      rational(mpoly::variable(var::p, r + d_of(lengths))) * det(m);
  auto poly = result.to_polynomial();
  if (!poly || !poly->is_laurent_free())
    fail(errc::non_polynomial_result, "gf_g_det: non-polynomial result");
  return *poly;
}

point_set lgv_points(const std::vector<int>& lengths) {
  point_set ps;
  const int r = static_cast<int>(lengths.size());
  int prefix = 0;
  for (int i = 1; i <= r - 1; ++i) {
    prefix += lengths[static_cast<std::size_t>(i) - 1];
    ps.starts.emplace_back(-(i - 1) - prefix, i - 1);
    ps.ends.emplace_back(-(i - 1), i);
  }
  return ps;
}

mpoly nonintersecting_paths(const std::vector<int>& lengths,
                            const path_constraint& constraint) {
  const int r = static_cast<int>(lengths.size());
  if (r <= 1) return mpoly::one();
  auto ps = lgv_points(lengths);
  const int npaths = r - 1;
  std::map<int, Int> hist;
  std::vector<int> t(static_cast<std::size_t>(npaths) + 1, 0);
  // Path i runs from s_i with t_i east steps, one north step, then east to
  // e_i.  Vertex-disjointness of consecutive paths on their shared level
  // reads s_i.x + t_i < s_{i-1}.x + t_{i-1}.
  std::function<void(int, int, int)> rec = [&](int i, int prev_top, int texp) {
    if (i > npaths) {
      ++hist[-texp];
      return;
    }
    auto [sx, sy] = ps.starts[static_cast<std::size_t>(i) - 1];
    int ex = ps.ends[static_cast<std::size_t>(i) - 1].first;
    for (int ti = 0; ti <= ex - sx; ++ti) {
      if (i > 1 && sx + ti >= prev_top) continue;
      bool ok = true;
      for (const auto& [pi, pt] : constraint.pass_up_edge) {
        if (pi != i) continue;
        if (!(pt.second == sy && sx + ti == pt.first && pt.first <= ex))
          ok = false;
      }
      for (const auto& [pi, pt] : constraint.avoid_point) {
        if (pi != i) continue;
        bool visits =
            (pt.second == sy && sx <= pt.first && pt.first <= sx + ti) ||
            (pt.second == sy + 1 && sx + ti <= pt.first && pt.first <= ex);
        if (visits) ok = false;
      }
      if (ok) rec(i + 1, sx + ti, texp + ti);
    }
  };
  rec(1, 0, 0);
  return from_p_exponents(hist);
}

namespace {

// Swap p -> p^{-1}.  The path enumerator weights a tuple p^{-sum t_i} while
// the matching heap carries p^{r + sum t_i}; mirroring bridges the two.
mpoly mirror_p(const mpoly& f) {
  mpoly r;
  for (const auto& [m, c] : f.terms()) {
    monomial m2 = m;
    m2[var::p] = -m2[var::p];
    r += mpoly::term(m2, c);
  }
  return r;
}

}  // namespace

mpoly gf_g_tilde_paths(const std::vector<int>& lengths, int k) {
  const int r = static_cast<int>(lengths.size());
  if (r == 1)
    return k == 1 + lengths[0] ? mpoly::variable(var::p, 1) : mpoly::zero();
  // The bottom piece ends at abscissa k exactly when path r-1 climbs after
  // k - a_r - 1 east steps.
  int t = k - lengths[static_cast<std::size_t>(r) - 1] - 1;
  auto ps = lgv_points(lengths);
  auto [sx, sy] = ps.starts.back();
  if (t < 0 || sx + t >= ps.ends.back().first + 1) return mpoly::zero();
  path_constraint c;
  c.pass_up_edge.push_back({r - 1, {sx + t, sy}});
  return mpoly::variable(var::p, r) * mirror_p(nonintersecting_paths(lengths, c));
}

mpoly gf_g_k_paths(const std::vector<int>& lengths, int k) {
  const int r = static_cast<int>(lengths.size());
  if (r == 1)
    return k == 1 + lengths[0] ? mpoly::variable(var::p, 1) : mpoly::zero();
  // pieces below the top end at l_i + a_i >= 1 + a_i, so P vanishes below
  // 1 + max(a_2..a_r); outside this range the avoid points go stale.
  int amax = 1 + *std::max_element(lengths.begin() + 1, lengths.end());
  auto ps = lgv_points(lengths);
  // P[avoid m_i(k)] collects the heaps whose pieces below the top all end
  // weakly left of abscissa k.
  auto constrained = [&](int kk) -> mpoly {
    if (kk < amax) return mpoly::zero();
    path_constraint c;
    for (int i = 1; i <= r - 1; ++i) {
      auto [sx, sy] = ps.starts[static_cast<std::size_t>(i) - 1];
      c.avoid_point.push_back(
          {i, {sx + kk - lengths[static_cast<std::size_t>(i)], sy}});
    }
    return nonintersecting_paths(lengths, c);
  };
  mpoly diff = constrained(k) - constrained(k - 1);
  return mpoly::variable(var::p, r) * mirror_p(diff);
}

}  // namespace pathheaps
