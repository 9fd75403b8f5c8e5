#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathheaps/heap1.hpp"

using namespace pathheaps;

namespace {

mpoly mono(int ex, int ey, int ep, int eq, Int c = 1) {
  monomial m;
  m[var::x] = ex, m[var::y] = ey, m[var::p] = ep, m[var::q] = eq;
  return mpoly::term(m, c);
}

}  // namespace

TEST_CASE("generating function examples") {
  // F_{(1,2)} for n = 1: 1 + xypq^3(p + y)
  mpoly f12 = gf_type1(path_family::one_b(2, 1));
  CHECK(f12 == mpoly::one() + mono(1, 1, 2, 3) + mono(1, 2, 1, 3));
  // F_{(2,1)} for n = 1: 1 + xypq^2(1 + yq)
  mpoly f21 = gf_type1(path_family::a_one(2, 1));
  CHECK(f21 == mpoly::one() + mono(1, 1, 1, 2) + mono(1, 2, 1, 3));
}

TEST_CASE("heap counts match path counts") {
  for (int b = 1; b <= 3; ++b)
    for (int n = 1; n <= 3; ++n) {
      auto fam = path_family::one_b(b, n);
      CHECK(gf_type1(fam).eval_ones() ==
            Int(paths_below_all(fam.ceiling).size()));
    }
  CHECK(gf_type1(path_family::one_b(2, 2)).eval_ones() == 12);
}

TEST_CASE("label table for the running example") {
  label_table t =
      make_label_table(path_family::general(parse_path("UDDUUDUDDUDDUUD")));
  CHECK(t.x_labels == std::vector<int>{10, 9, 7, 6, 5, 4, 3, 1});
  CHECK(t.y_labels == std::vector<int>{11, 9, 8, 7, 5, 3, 2});
  CHECK(t.piece_length(3) == 2);
  CHECK(t.piece_length(5) == 2);
  CHECK(t.piece_length(1) == 1);
  CHECK(t.max_label == 11);
}

TEST_CASE("heap from the running example path") {
  auto fam = path_family::general(parse_path("UDDUUDUDDUDDUUD"));
  heap1 h = heap1_from_path(parse_path("DDDUUDUDDUDUDUU"), fam);
  REQUIRE(h.pieces.size() == 4);
  CHECK(h.pieces[0] == staircase{1, 5});
  CHECK(h.pieces[1] == staircase{3, 7});
  CHECK(h.pieces[2] == staircase{5, 8});
  CHECK(h.pieces[3] == staircase{6, 9});
  CHECK(path_from_heap1(h) == parse_path("DDDUUDUDDUDUDUU"));
}

TEST_CASE("path round trips") {
  std::vector<path_family> families;
  for (int b = 1; b <= 3; ++b)
    for (int n = 1; n <= 3; ++n) families.push_back(path_family::one_b(b, n));
  for (int a = 2; a <= 3; ++a)
    for (int n = 1; n <= 3; ++n) families.push_back(path_family::a_one(a, n));
  families.push_back(path_family::general(parse_path("UDDUUD")));
  for (auto& fam : families)
    for (auto& mu : paths_below_all(fam.ceiling)) {
      heap1 h = heap1_from_path(mu, fam);
      validate_heap1(h);
      CHECK(path_from_heap1(h) == mu);
    }
}

TEST_CASE("validation rejects malformed heaps") {
  auto fam = path_family::one_b(2, 2);
  heap1 bad;
  bad.family = fam;
  bad.pieces = {{2, 4}};  // 4 is not a y-label of this family
  CHECK_THROWS_AS(validate_heap1(bad), error);
  heap1 order;
  order.family = fam;
  order.pieces = {{3, 5}, {1, 3}};  // lefts must strictly increase
  CHECK_THROWS_AS(validate_heap1(order), error);
}

TEST_CASE("duality") {
  CHECK(max_label(path_family::one_b(2, 2)) == 5);
  for (int b = 1; b <= 3; ++b)
    for (int n = 1; n <= 3; ++n) {
      auto fam = path_family::one_b(b, n);
      CHECK(verify_duality(fam));
      for (auto& mu : paths_below_all(fam.ceiling)) {
        heap1 h = heap1_from_path(mu, fam);
        heap1 d = eta(h);
        validate_heap1(d);
        CHECK(eta(d).pieces == h.pieces);
      }
    }
}

TEST_CASE("duality substitution example") {
  monomial m;
  m[var::x] = 3, m[var::y] = 13, m[var::p] = 12, m[var::q] = 25;
  monomial xm, qinv, pinv;
  xm[var::x] = 1, xm[var::p] = 11, xm[var::q] = 11;
  qinv[var::q] = -1, pinv[var::p] = -1;
  std::map<var, std::pair<Int, monomial>> rules{
      {var::x, {1, xm}}, {var::p, {1, qinv}}, {var::q, {1, pinv}}};
  CHECK(mpoly::term(m, 1).substitute(rules).to_string() ==
        "x^3*y^13*p^8*q^21");
}
