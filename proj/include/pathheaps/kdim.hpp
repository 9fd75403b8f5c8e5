#pragma once

#include <vector>

#include "pathheaps/path.hpp"
#include "pathheaps/series.hpp"

namespace pathheaps {

// The n+1 position vectors of a (1,k)-path: vectors[j-1] is x_j, a length-k
// weakly decreasing vector with max - min <= 1 and entries >= 1.
struct x_vector_seq {
  std::vector<std::vector<int>> vectors;
};

// Rooted tree on nodes 1..n+1 (node 1 the root): parent[i-2] is the parent
// of node i, the nearest earlier node whose vector is adjacent.
struct planar_tree {
  std::vector<int> parent;
};

// Split the step sequence of a (1,k)-path into the step sequences of k
// Dyck paths: peel ceil(m/i) for i = k down to 1 and recurse on the
// remainder.  Output index c-1 holds D_c; entries increase with c.
std::vector<step_sequence> decompose_steps(const step_sequence& m, int k);

// x_j[c-1] = j - m(D_c)_{n+2-j} from the decomposition above.
x_vector_seq x_vectors(const step_sequence& m, int k);

// Both vectors lie in the vertex set (validated) and differ by at most one
// in every component.
bool edge_test(const std::vector<int>& u, const std::vector<int>& v, int k);

// parent(i) = largest j < i with (x_i, x_j) an edge; connectivity is
// guaranteed for vectors coming from a path.
planar_tree build_tree(const x_vector_seq& xs, int k);

// v = sum of all vector entries - (n+1) k.
int tree_valuation(const x_vector_seq& xs, int k);

// Depth of each node below the root, for serialization.
std::vector<int> tree_levels(const planar_tree& t);

// F(k; x, p) = sum_n x^n sum_{size-n paths} p^{v}; equals
// gf_fuss_catalan(k) with x -> x/p.
series gf_f(int k, int order, std::int64_t cap = 10'000'000);

// Number of distinct x-vector sequences over all (1,k)-paths of size n.
long long count_trees(int k, int n, std::int64_t cap = 10'000'000);

// The c-th component of x_i equals the left abscissa of piece i in the
// dimer heap of the Dyck path D_c (ceiling (UD)^n), for every i and c.
bool verify_dimer_positions(const lattice_path& mu, int k);

}  // namespace pathheaps
