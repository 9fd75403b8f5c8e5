#pragma once

#include "pathheaps/series.hpp"

namespace pathheaps {

// t_n = p^{n + (k+1) n(n-1)/2} / (p;p)_n: the weighted sum over trivial
// heaps of n pieces of length k (pairwise disjoint closed segments at
// abscissae >= 1).
rational trivial_heap_term(int k, int n);

// T(x,p) = sum_n (-1)^n t_n x^n, truncated at the given order.
series trivial_series(int k, int order);

// Generating function of (1,k)-Dyck paths by size (x) and area below the
// ceiling (p): (T(px,p)/T(x,p) - 1) / (px).  The coefficient of x^n is
// p^n sum p^{area} over size-n paths and is a polynomial in p.
series gf_fuss_catalan(int k, int order);

// The same series by direct enumeration: coefficient of x^n is
// p^n sum_{paths below (UD^k)^n} p^{area}.
series gf_fuss_catalan_by_area(int k, int order,
                               std::int64_t cap = 10'000'000);

// R(x,p) = 1 + p x prod_{j=0}^{k} R(p^j x, p) for the undivided ratio
// R = T(px)/T(x) = 1 + px gf_fuss_catalan, checked to the given order.
bool check_functional_equation(int k, int order);

// Heaps of m pieces of length k (top pinned at abscissa 1) summed with
// v(H) = x^m p^{sum lefts} equal p x G(x,p) coefficient-wise, checked for
// 1 <= m <= max_pieces.
bool heap_sum_check(int k, int max_pieces);

}  // namespace pathheaps
