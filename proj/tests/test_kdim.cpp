#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathheaps/kdim.hpp"
#include "pathheaps/qseries.hpp"

using namespace pathheaps;

TEST_CASE("step decomposition of the worked example") {
  step_sequence m = {{8, 1, 0, 0}};
  auto parts = decompose_steps(m, 3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == step_sequence{{2, 0, 0, 0}});
  CHECK(parts[1] == step_sequence{{3, 0, 0, 0}});
  CHECK(parts[2] == step_sequence{{3, 1, 0, 0}});
}

TEST_CASE("x-vectors, tree and valuation of the worked example") {
  step_sequence m = {{8, 1, 0, 0}};
  x_vector_seq xs = x_vectors(m, 3);
  REQUIRE(xs.vectors.size() == 4);
  CHECK(xs.vectors[0] == std::vector<int>{1, 1, 1});
  CHECK(xs.vectors[1] == std::vector<int>{2, 2, 2});
  CHECK(xs.vectors[2] == std::vector<int>{3, 3, 2});
  CHECK(xs.vectors[3] == std::vector<int>{2, 1, 1});

  planar_tree t = build_tree(xs, 3);
  CHECK(t.parent == std::vector<int>{1, 2, 2});
  CHECK(tree_levels(t) == std::vector<int>{0, 1, 2, 2});
  CHECK(tree_valuation(xs, 3) == 9);
}

TEST_CASE("edge test") {
  CHECK(edge_test({3, 2, 2}, {2, 1, 1}, 3));
  CHECK_FALSE(edge_test({3, 3, 2}, {2, 1, 1}, 3));
  CHECK(edge_test({1, 1, 1}, {1, 1, 1}, 3));
}

TEST_CASE("tree counts") {
  CHECK(count_trees(3, 2) == 22);
  // k = 1: sequences of dimer positions are in bijection with Dyck paths
  CHECK(count_trees(1, 3) == 14);
}

TEST_CASE("F matches the area series after x -> x/p") {
  for (int k = 1; k <= 3; ++k) {
    series f = gf_f(k, 4);
    monomial pinv;
    pinv[var::p] = -1;
    series g = gf_fuss_catalan(k, 4).scaled_x(rational(mpoly::term(pinv, 1)));
    CHECK(f == g);
  }
}

TEST_CASE("vector components track dimer positions") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : paths_below_all(path_family::one_b(k, n).ceiling))
        CHECK(verify_dimer_positions(mu, k));
}
