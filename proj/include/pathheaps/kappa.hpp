#pragma once

#include "pathheaps/heap1.hpp"
#include "pathheaps/heap2.hpp"

namespace pathheaps {

// Bijection between type-I heaps of the (UD^b)^n family and type-II heaps
// with n+1 pieces of length b.  Staircase [l, 1 + b*p] becomes the piece
// with left abscissa b*p - l + 1 in row p; the remaining rows interpolate
// from the nearest filled row above.
heap2 kappa(const heap1& h);

// Inverse: order the pieces by repeatedly removing the right-most maximal
// one, keep the indices i where the previous right end differs from the
// current left end, and read each kept piece [l_i, r_i] off as the
// staircase [b(i-1) - l_i + 1, 1 + b(i-1)].
heap1 kappa_inv(const heap2& h, int b);

}  // namespace pathheaps
