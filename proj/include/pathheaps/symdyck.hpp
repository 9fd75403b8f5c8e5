#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathheaps/path.hpp"
#include "pathheaps/series.hpp"

namespace pathheaps {

// Monomer (a point at abscissa 1) or dimer (a segment [left, left+1]).
struct sym_piece {
  bool is_dimer = false;
  int left = 1;

  friend auto operator<=>(const sym_piece&, const sym_piece&) = default;
};

// Heap of monomers and dimers with a unique maximal piece at abscissa 1,
// listed top to bottom (level descending, then left descending).
struct sym_heap {
  std::vector<sym_piece> pieces;

  int point_size() const;  // 2 N(dimer) + N(monomer)
  int piece_size() const { return static_cast<int>(pieces.size()); }

  friend auto operator<=>(const sym_heap&, const sym_heap&) = default;
};

// Symmetric non-crossing matching as a word over u/d: each u opens an arch
// or is a half-arch, each d closes the innermost open arch.  Every prefix
// has at least as many u as d; u's left open at the end are half-arches.
struct sym_matching {
  std::string word;

  friend auto operator<=>(const sym_matching&, const sym_matching&) = default;
};

// Levels from dropping the pieces bottom-up; fails with invalid_heap when
// the list is not the canonical order of a valid heap.
std::vector<int> sym_levels(const sym_heap& h);
void validate_sym_heap(const sym_heap& h);
void validate_sym_matching(const sym_matching& c);

// All heaps with 2 N(d) + N(m) = point_size, sorted.
std::vector<sym_heap> enumerate_sym_heaps(int point_size,
                                          std::int64_t cap = 10'000'000);

// All matching words of the given length, sorted.
std::vector<sym_matching> enumerate_matchings(int point_size);

// v(H) = x^{pieces} y^{point_size} p^{sum of lefts}.
mpoly valuation_sym(const sym_heap& h);

// A: trivial heaps of dimers, a_n = p^{n^2} y^{2n} / (p;p)_n.
// B: trivial heaps of dimers and monomers, b_n = a_n + y p^n a_{n-1}.
// Both signed: sum (-1)^n a_n x^n.
series series_a(int order);
series series_b(int order);

// G(x,y,p) = A(px) / B(x): heaps counted by pieces (x), points (y) and
// the sum of left abscissae (p).
series gf_sym(int order);

// The same via the continued fraction
// (pxy)^{-1} ([a_0 = pxy, a_i = p^i x y^2] - 1) with
// [a_0, a_1, ...] = 1/(1 - a_0/(1 - a_1/(1 - ...))).
series gf_sym_cf(int order);

// [a_i = p^{i+1} x y^2]: the Dyck-path generating function
// sum (p x y^2)^n sum_{Dyck paths of size n} p^{area}, both ways.
series catalan_cf(int order);
series catalan_by_area(int order);

// Bijection with matchings: a dimer at abscissa c becomes an arch nested
// under c-1 others, a monomer becomes a half-arch; inverse reads arches
// back as dimers at 1 + (number of enclosing arches).
sym_matching heap_to_matching(const sym_heap& h);
sym_heap matching_to_heap(const sym_matching& c);

// (number of arches + half-arches, total weight w(C)): an arch weighs one
// plus the number of arches strictly enclosing it, a half-arch weighs one.
std::pair<int, int> matching_weight(const sym_matching& c);

// sum_{n <= max_points} y^n sum_{matchings of n points} x^{pieces} p^{w}.
mpoly gf_by_matchings(int max_points);

// Coefficient of x^n: sum over Dyck paths mu of size n+1 of
// p^{n + primes(mu) + area(mu) - (n+1)} y^{n + (n+1) - primes(mu)}.
series gf_by_dyck(int order);

// Word bijection: a half-arch u becomes du, arch letters stay, and the
// result is wrapped in u ... d; the inverse strips the wrap and peels
// du -> u (half-arch) or a maximal prime block (arches).
lattice_path sym_to_dyck(const sym_matching& mu);
sym_matching dyck_to_sym(const lattice_path& mu);

}  // namespace pathheaps
