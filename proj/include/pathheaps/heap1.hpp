#pragma once

#include <map>
#include <vector>

#include "pathheaps/mpoly.hpp"
#include "pathheaps/path.hpp"

namespace pathheaps {

// A staircase piece, identified by its left and right abscissae l < r.
struct staircase {
  int l = 0, r = 0;

  friend auto operator<=>(const staircase&, const staircase&) = default;
};

// A type-I heap: staircases listed in drop order (first dropped first).
// Left abscissae strictly increase along the drop order, and no staircase
// nests inside another.
struct heap1 {
  path_family family;
  std::vector<staircase> pieces;
};

// Position labels for a family: x-labels attach to the east steps of the
// ceiling (index i = 0 .. N(D)-1), y-labels to its levels (j = 1 .. N(U)).
struct label_table {
  std::vector<int> x_labels;            // x_labels[i], i = 0 .. N(D)-1
  std::vector<int> y_labels;            // y_labels[j-1], j = 1 .. N(U)
  std::map<int, int> piece_len;         // left abscissa -> length (default 1)
  int max_label = 0;                    // max over both label sets

  int piece_length(int position) const {
    auto it = piece_len.find(position);
    return it == piece_len.end() ? 1 : it->second;
  }
};

label_table make_label_table(const path_family& family);

// Largest label used by the family; equals an+1 for the (1,a) family of
// size n, and is invariant under path duality.
int max_label(const path_family& family);

heap1 heap1_from_path(const lattice_path& mu, const path_family& family);
lattice_path path_from_heap1(const heap1& h);

// Structural validation: labels exist, lefts strictly increase and no piece
// nests in another.  Fails with invalid_heap.
void validate_heap1(const heap1& h);

// v(H) = x^{#pieces} y^{sum of spans r-l} p^{sum of lefts} q^{sum of rights}.
mpoly valuation1(const heap1& h);

// Sum of v(H) over all heaps of the family (empty heap included).
mpoly gf_type1(const path_family& family, std::int64_t cap = 10'000'000);

// The duality eta: [l, r] -> [M-r, M-l] with M = max_label + 1, order
// reversed; maps heaps of a family onto heaps of the dual family.
heap1 eta(const heap1& h);

path_family dual_family(const path_family& family);

// Check F_family(x,y,p,q) = F_dual(p^M q^M x, y, q^-1, p^-1) with
// M = max_label(family) + 1.
bool verify_duality(const path_family& family, std::int64_t cap = 10'000'000);

}  // namespace pathheaps
