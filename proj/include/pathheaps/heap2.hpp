#pragma once

#include <utility>
#include <vector>

#include "pathheaps/mpoly.hpp"
#include "pathheaps/path.hpp"
#include "pathheaps/rational.hpp"

namespace pathheaps {

// A type-II heap: r horizontal segments listed top to bottom; piece i has
// length lengths[i-1] and left abscissa lefts[i-1].  The top piece sits at
// abscissa 1 and each lower piece starts weakly left of the right end of
// the piece above it: lefts[i] <= lefts[i-1] + lengths[i-1].
struct heap2 {
  std::vector<int> lengths;
  std::vector<int> lefts;
};

void validate_heap2(const heap2& h);

// Build the heap of the pair (ceiling mu0, path mu weakly below it): the
// lengths are a(mu0) and the lefts come from the b-sequence differences.
heap2 heap2_from_pair(const lattice_path& mu0, const lattice_path& mu);

// Inverse: recover mu from the heap, given its ceiling.
lattice_path pair_from_heap2(const heap2& h, const lattice_path& mu0);

// v(H) = p^{sum of left abscissae}.
mpoly valuation2(const heap2& h);

// G(a): sum of valuations over all heaps with the given lengths, top piece
// pinned at abscissa 1, by direct enumeration.
mpoly gf_g(const std::vector<int>& lengths);

// Length-r' vector of G~_k(a): heaps whose bottom piece has right abscissa
// exactly k; gf_g_tilde sums to gf_g over k = 1 .. 1 + sum(a).
mpoly gf_g_tilde(const std::vector<int>& lengths, int k);

// Entry weight of the path matrix: w(s_i -> e_j), a Laurent polynomial in p.
mpoly lgv_weight(int i, int j, const std::vector<int>& lengths);

// G(a) via the determinant formula: p^{r + D(a)} det[w(s_i -> e_j)] with
// D(a) = sum_{j=1}^{r-1} (r-j) a_j; returns p for r = 1.  Fails with
// non_polynomial_result if the result is not a polynomial in p.
mpoly gf_g_det(const std::vector<int>& lengths);

// Start / end points of the non-intersecting path system for the lengths:
// s_i = (-(i-1) - a_1 - ... - a_i, i-1) and e_i = (-(i-1), i), i = 1..r-1.
struct point_set {
  std::vector<std::pair<int, int>> starts, ends;
};

point_set lgv_points(const std::vector<int>& lengths);

// Optional side constraints on the tuple of paths.  Points are absolute
// lattice coordinates; path indices are 1-based.
struct path_constraint {
  // (i, pt): path i must traverse the up edge from pt to pt + (0, 1).
  std::vector<std::pair<int, std::pair<int, int>>> pass_up_edge;
  // (i, pt): path i must not visit pt.
  std::vector<std::pair<int, std::pair<int, int>>> avoid_point;
};

// Weighted count of tuples of vertex-disjoint up/right paths s_i -> e_i;
// each path has exactly one up step, weighted p^{-t} when preceded by t
// right steps.  Returned as a Laurent polynomial in p.
mpoly nonintersecting_paths(const std::vector<int>& lengths,
                            const path_constraint& constraint = {});

// G~_k(a) from the path system: the marked up edge at
// s_{r-1} + (k - a_r - 1, 0) forces the bottom piece to end at abscissa k;
// the enumerator is mirrored in p and scaled by p^r to match valuations.
mpoly gf_g_tilde_paths(const std::vector<int>& lengths, int k);

// Heaps whose pieces below the top have maximal right abscissa exactly k,
// by direct enumeration (zero polynomial when no heap qualifies); for a
// single piece, the piece's own right abscissa is used.
mpoly gf_g_k(const std::vector<int>& lengths, int k);

// Heaps whose pieces below the top all end weakly left of k, with at least
// one ending at k exactly, via the marked-point difference
// p^r mirror_p(P[avoid m_i(k)] - P[avoid m_i(k-1)]) with
// m_i(k) = s_i + (k - a_{i+1}, 0) and P := 0 when k < max a_i.  Summing
// over k recovers gf_g.
mpoly gf_g_k_paths(const std::vector<int>& lengths, int k);

}  // namespace pathheaps
