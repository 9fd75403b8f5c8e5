#include "pathheaps/kdim.hpp"

#include <algorithm>
#include <set>

#include "pathheaps/heap2.hpp"

namespace pathheaps {

std::vector<step_sequence> decompose_steps(const step_sequence& m, int k) {
  if (k < 1) fail(errc::invalid_input, "decompose_steps: k must be >= 1");
  std::vector<step_sequence> out(static_cast<std::size_t>(k));
  step_sequence rest = m;
  for (int i = k; i >= 1; --i) {
    step_sequence d;
    d.m.reserve(rest.m.size());
    for (int v : rest.m) {
      if (v < 0) fail(errc::invalid_step_sequence, "decompose_steps: negative");
      d.m.push_back((v + i - 1) / i);
    }
    for (std::size_t j = 0; j < rest.m.size(); ++j) rest.m[j] -= d.m[j];
    path_from_steps(d, 1);  // validates d as a Dyck-path step sequence
    out[static_cast<std::size_t>(i) - 1] = std::move(d);
  }
  return out;
}

x_vector_seq x_vectors(const step_sequence& m, int k) {
  auto ds = decompose_steps(m, k);
  const int n = static_cast<int>(m.m.size()) - 1;
  x_vector_seq xs;
  for (int j = 1; j <= n + 1; ++j) {
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int c = 1; c <= k; ++c)
      v[static_cast<std::size_t>(c) - 1] =
          j - ds[static_cast<std::size_t>(c) - 1]
                  .m[static_cast<std::size_t>(n + 1 - j)];
    xs.vectors.push_back(std::move(v));
  }
  return xs;
}

namespace {

void check_vertex(const std::vector<int>& u, int k) {
  bool ok = static_cast<int>(u.size()) == k && !u.empty() && u.back() >= 1 &&
            u.front() - u.back() <= 1;
  for (std::size_t i = 0; ok && i + 1 < u.size(); ++i) ok = u[i] >= u[i + 1];
  if (!ok)
    fail(errc::invalid_input,
         "edge_test: vector is not weakly decreasing with spread <= 1");
}

}  // namespace

bool edge_test(const std::vector<int>& u, const std::vector<int>& v, int k) {
  check_vertex(u, k);
  check_vertex(v, k);
  for (int c = 0; c < k; ++c)
    if (std::abs(u[static_cast<std::size_t>(c)] -
                 v[static_cast<std::size_t>(c)]) > 1)
      return false;
  return true;
}

planar_tree build_tree(const x_vector_seq& xs, int k) {
  planar_tree t;
  const int n1 = static_cast<int>(xs.vectors.size());
  for (int i = 2; i <= n1; ++i) {
    int p = 0;
    for (int j = i - 1; j >= 1 && p == 0; --j)
      if (edge_test(xs.vectors[static_cast<std::size_t>(i) - 1],
                    xs.vectors[static_cast<std::size_t>(j) - 1], k))
        p = j;
    if (p == 0)
      fail(errc::invalid_input, "build_tree: node has no admissible parent");
    t.parent.push_back(p);
  }
  return t;
}

int tree_valuation(const x_vector_seq& xs, int k) {
  int s = 0;
  for (const auto& v : xs.vectors)
    for (int e : v) s += e;
  return s - static_cast<int>(xs.vectors.size()) * k;
}

std::vector<int> tree_levels(const planar_tree& t) {
  std::vector<int> level(t.parent.size() + 1, 0);
  for (std::size_t i = 0; i < t.parent.size(); ++i)
    level[i + 1] = level[static_cast<std::size_t>(t.parent[i]) - 1] + 1;
  return level;
}

series gf_f(int k, int order, std::int64_t cap) {
  series s(order);
  for (int n = 0; n <= order; ++n) {
    auto fam = path_family::one_b(k, n);
    mpoly c;
    for (const auto& mu : paths_below_all(fam.ceiling, cap)) {
      auto xs = x_vectors(path_to_steps(mu, k), k);
      build_tree(xs, k);  // asserts connectivity
      c += mpoly::variable(var::p, tree_valuation(xs, k));
    }
    s.set_coeff(n, rational(c));
  }
  return s;
}

long long count_trees(int k, int n, std::int64_t cap) {
  std::set<std::vector<std::vector<int>>> seen;
  auto fam = path_family::one_b(k, n);
  for (const auto& mu : paths_below_all(fam.ceiling, cap))
    seen.insert(x_vectors(path_to_steps(mu, k), k).vectors);
  return static_cast<long long>(seen.size());
}

bool verify_dimer_positions(const lattice_path& mu, int k) {
  auto xs = x_vectors(path_to_steps(mu, k), k);
  const int n1 = static_cast<int>(xs.vectors.size());
  auto ds = decompose_steps(path_to_steps(mu, k), k);
  auto ceiling = path_family::one_b(1, n1 - 1).ceiling;
  for (int c = 1; c <= k; ++c) {
    heap2 h = heap2_from_pair(
        ceiling, path_from_steps(ds[static_cast<std::size_t>(c) - 1], 1));
    for (int i = 1; i <= n1; ++i)
      if (h.lefts[static_cast<std::size_t>(i) - 1] !=
          xs.vectors[static_cast<std::size_t>(i) - 1]
                    [static_cast<std::size_t>(c) - 1])
        return false;
  }
  return true;
}

}  // namespace pathheaps
