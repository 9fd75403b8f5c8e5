#include "pathheaps/kappa.hpp"

#include <vector>

#include "pathheaps/error.hpp"

namespace pathheaps {

heap2 kappa(const heap1& h) {
  validate_heap1(h);
  if (h.family.k != path_family::kind::one_b)
    fail(errc::invalid_heap, "kappa: heap family must be (UD^b)^n");
  const int b = h.family.param;
  const int n = h.family.n;

  // Row q = 1..n holds the piece at height n+1-q; row 0 is the pinned top.
  std::vector<int> lefts(static_cast<std::size_t>(n) + 1, 0);
  lefts[0] = 1;
  int prev_p = 0, prev_l_row = 0;  // p(0) = 0 with a virtual L_0 = 0
  auto fill_gap = [&](int from_q, int to_q, int base_left, int base_q) {
    for (int q = from_q; q < to_q; ++q)
      lefts[static_cast<std::size_t>(q)] = base_left + b * (q - base_q) + 1;
  };
  for (const staircase& s : h.pieces) {
    if ((s.r - 1) % b != 0)
      fail(errc::invalid_heap, "kappa: staircase right end is not 1 + b*p");
    int p = (s.r - 1) / b;
    if (p < 1 || p > n || p <= prev_p)
      fail(errc::invalid_heap, "kappa: staircase heights out of range");
    int big_l = b * p - s.l;
    fill_gap(prev_p + 1, p, prev_l_row, prev_p);
    lefts[static_cast<std::size_t>(p)] = big_l + 1;
    prev_p = p;
    prev_l_row = big_l;
  }
  fill_gap(prev_p + 1, n + 1, prev_l_row, prev_p);

  heap2 out;
  out.lengths.assign(static_cast<std::size_t>(n) + 1, b);
  out.lefts = std::move(lefts);
  validate_heap2(out);
  return out;
}

heap1 kappa_inv(const heap2& h, int b) {
  validate_heap2(h);
  const int m = static_cast<int>(h.lengths.size());
  if (m == 0) fail(errc::invalid_heap, "kappa_inv: empty heap");
  for (int len : h.lengths)
    if (len != b) fail(errc::invalid_heap, "kappa_inv: piece lengths differ");
  const int n = m - 1;

  // above[i][j]: the piece in row j lies above the piece in row i, taking
  // the transitive closure of touching-or-overlapping rows.
  auto overlaps = [&](int i, int j) {
    return h.lefts[static_cast<std::size_t>(i)] <=
               h.lefts[static_cast<std::size_t>(j)] + b &&
           h.lefts[static_cast<std::size_t>(j)] <=
               h.lefts[static_cast<std::size_t>(i)] + b;
  };
  std::vector<std::vector<bool>> above(
      static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      above[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          overlaps(i, j);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (above[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            above[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          above[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

  // Remove the right-most maximal piece until none remain.
  std::vector<int> order;
  std::vector<bool> removed(static_cast<std::size_t>(m), false);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int i = 0; i < m; ++i) {
      if (removed[static_cast<std::size_t>(i)]) continue;
      bool maximal = true;
      for (int j = 0; j < m && maximal; ++j)
        if (!removed[static_cast<std::size_t>(j)] &&
            above[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          maximal = false;
      if (maximal && (best == -1 || h.lefts[static_cast<std::size_t>(i)] >
                                        h.lefts[static_cast<std::size_t>(best)]))
        best = i;
    }
    if (best == -1) fail(errc::invalid_heap, "kappa_inv: no maximal piece");
    order.push_back(best);
    removed[static_cast<std::size_t>(best)] = true;
  }

  heap1 out;
  out.family = path_family::one_b(b, n);
  int prev_r = 1;
  for (int i = 1; i <= m; ++i) {
    int l = h.lefts[static_cast<std::size_t>(order[static_cast<std::size_t>(i) - 1])];
    if (prev_r != l)
      out.pieces.push_back({b * (i - 1) - l + 1, 1 + b * (i - 1)});
    prev_r = l + b;
  }
  validate_heap1(out);
  return out;
}

}  // namespace pathheaps
