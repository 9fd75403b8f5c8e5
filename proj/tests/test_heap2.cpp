#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathheaps/heap2.hpp"

using namespace pathheaps;

namespace {

lattice_path zigzag(int b, int n) {
  std::string w;
  for (int i = 0; i < n; ++i) w += "U" + std::string(b, 'D');
  return {w};
}

}  // namespace

TEST_CASE("construction from a path pair") {
  heap2 h = heap2_from_pair(parse_path("UDDUUD"), parse_path("DUDUDU"));
  CHECK(h.lengths == std::vector<int>{1, 0, 2, 1});
  CHECK(h.lefts == std::vector<int>{1, 2, 1, 2});
  CHECK(valuation2(h).to_string() == "p^6");
  CHECK(pair_from_heap2(h, parse_path("UDDUUD")) == parse_path("DUDUDU"));
  // a ceiling whose a-sequence starts with 2
  heap2 g = heap2_from_pair(parse_path("UDUUDD"), parse_path("DUDUDU"));
  CHECK(g.lengths == std::vector<int>{2, 0, 1, 1});
  CHECK(g.lefts == std::vector<int>{1, 3, 2, 2});
  CHECK(valuation2(g).to_string() == "p^8");
  // the top path maps to all-ones lefts
  heap2 top = heap2_from_pair(parse_path("UDDUUD"), parse_path("UDDUUD"));
  CHECK(top.lefts == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("pair round trip over a full ceiling") {
  for (auto& word : {"UDDUUD", "UDUUDD", "UDDUDD"}) {
    lattice_path mu0 = parse_path(word);
    for (auto& mu : paths_below_all(mu0)) {
      heap2 h = heap2_from_pair(mu0, mu);
      validate_heap2(h);
      CHECK(pair_from_heap2(h, mu0) == mu);
      int lefts = 0;
      for (int c : h.lefts) lefts += c;
      CHECK(lefts - static_cast<int>(h.lefts.size()) == area(mu, mu0));
    }
  }
}

TEST_CASE("gf_g basics") {
  CHECK(gf_g({1}).to_string() == "p");
  CHECK(gf_g({1, 0, 2, 1}).eval_ones() == 10);
  for (int k = 1; k <= 3; ++k) CHECK(gf_g({k, k}).eval_ones() == k + 1);
  CHECK(gf_g({}).is_one());
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate_heap2(heap2{{1, 1}, {1}}), error);
  CHECK_THROWS_AS(validate_heap2(heap2{{1, 1}, {1, 3}}), error);
  CHECK_THROWS_AS(validate_heap2(heap2{{1}, {0}}), error);
  validate_heap2(heap2{{1, 1}, {1, 2}});
}

TEST_CASE("determinant formula matches enumeration") {
  CHECK(gf_g_det({2}).to_string() == "p");
  CHECK(gf_g_det({0, 0, 0}) == gf_g({0, 0, 0}));
  std::vector<std::vector<int>> grid;
  std::vector<int> v;
  std::function<void()> rec = [&] {
    if (!v.empty()) grid.push_back(v);
    if (v.size() == 4) return;
    for (int e = 0; e <= 2; ++e) {
      v.push_back(e);
      rec();
      v.pop_back();
    }
  };
  rec();
  for (auto& a : grid) CHECK(gf_g_det(a) == gf_g(a));
}

TEST_CASE("lgv weights") {
  CHECK_FALSE(lgv_weight(2, 1, {1, 1, 1}).is_zero());  // j = i-1 allowed
  CHECK(lgv_weight(3, 1, {1, 1, 1, 1}).is_zero());     // j < i-1 cut off
  CHECK(lgv_weight(1, 1, {1, 1}).to_string() == "p^-1 + 1");
}

TEST_CASE("bottom slice recursion, path system and telescoping") {
  std::vector<std::vector<int>> profiles = {
      {1, 1}, {2, 2, 2}, {1, 0, 2, 1}, {3, 1}, {0, 2}, {2, 1, 0, 2}};
  for (auto& a : profiles) {
    mpoly g = gf_g(a);
    int kmax = 1;
    for (int x : a) kmax += x;
    mpoly sum_tilde, sum_tilde_paths, sum_k;
    for (int k = 0; k <= kmax; ++k) {
      mpoly t = gf_g_tilde(a, k);
      sum_tilde += t;
      sum_tilde_paths += gf_g_tilde_paths(a, k);
      if (k >= 1) {
        mpoly gk = gf_g_k_paths(a, k);
        CHECK(gk == gf_g_k(a, k));
        sum_k += gk;
      }
    }
    CHECK(sum_tilde == g);
    CHECK(sum_tilde_paths == g);
    CHECK(sum_k == g);
    // top boundary value of the bottom-slice series
    int d = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      d += static_cast<int>(a.size() - 1 - i) * a[i];
    monomial m;
    m[var::p] = static_cast<int>(a.size()) + d;
    CHECK(gf_g_tilde(a, kmax) == mpoly::term(m, 1));
  }
}

TEST_CASE("unconstrained path system reproduces gf_g") {
  for (auto& a : std::vector<std::vector<int>>{{1, 1}, {1, 0, 2, 1}, {2, 2}}) {
    point_set ps = lgv_points(a);
    CHECK(ps.starts.size() == a.size() - 1);
    // G = p^r * (free enumerator with p -> 1/p)
    mpoly mirrored;
    mpoly free_paths = nonintersecting_paths(a);
    for (const auto& [m, c] : free_paths.terms()) {
      monomial mm = m;
      mm[var::p] = -mm[var::p];
      mirrored += mpoly::term(mm, c);
    }
    const int r = static_cast<int>(a.size());
    CHECK(gf_g(a) == mpoly::variable(var::p, r) * mirrored);
  }
}
