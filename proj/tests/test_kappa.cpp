#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathheaps/kappa.hpp"

using namespace pathheaps;

TEST_CASE("single staircase example") {
  heap1 h;
  h.family = path_family::one_b(2, 2);
  h.pieces = {{1, 3}};
  heap2 g = kappa(h);
  CHECK(g.lengths == std::vector<int>{2, 2, 2});
  CHECK(g.lefts == std::vector<int>{1, 2, 4});
  CHECK(kappa_inv(g, 2).pieces == h.pieces);
}

TEST_CASE("inverse examples") {
  auto inv = [](std::vector<int> lefts) {
    return kappa_inv(heap2{{2, 2, 2}, std::move(lefts)}, 2).pieces;
  };
  CHECK(inv({1, 2, 4}) == std::vector<staircase>{{1, 3}});
  CHECK(inv({1, 3, 4}) == std::vector<staircase>{{1, 5}});
  CHECK(inv({1, 2, 3}) == std::vector<staircase>{{1, 3}, {2, 5}});
  // empty heap of type I <-> the all-left heap of type II
  CHECK(inv({1, 3, 5}).empty());
}

TEST_CASE("kappa rejects wrong shapes") {
  heap1 h;
  h.family = path_family::a_one(2, 2);
  CHECK_THROWS_AS(kappa(h), error);
  CHECK_THROWS_AS(kappa_inv(heap2{{2, 1, 2}, {1, 2, 3}}, 2), error);
}

TEST_CASE("round trips, path consistency and weights") {
  for (int b = 1; b <= 3; ++b)
    for (int n = 1; n <= 4; ++n) {
      auto fam = path_family::one_b(b, n);
      for (auto& mu : paths_below_all(fam.ceiling)) {
        heap1 h = heap1_from_path(mu, fam);
        heap2 g = kappa(h);
        validate_heap2(g);
        CHECK(static_cast<int>(g.lefts.size()) == n + 1);
        CHECK(kappa_inv(g, b).pieces == h.pieces);
        // kappa commutes with the two path encodings
        CHECK(pair_from_heap2(g, fam.ceiling) == mu);
        // p-weight of the type-II heap records the area
        int lefts = 0;
        for (int c : g.lefts) lefts += c;
        CHECK(lefts - (n + 1) == area(mu, fam.ceiling));
      }
    }
}
