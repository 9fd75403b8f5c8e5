#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "pathheaps/symdyck.hpp"

using namespace pathheaps;

TEST_CASE("heap counts by point size") {
  std::vector<int> want = {1, 1, 2, 3, 6, 10, 20, 35, 70};
  for (int n = 0; n < static_cast<int>(want.size()); ++n) {
    CHECK(enumerate_sym_heaps(n).size() == static_cast<size_t>(want[n]));
    CHECK(enumerate_matchings(n).size() == static_cast<size_t>(want[n]));
  }
}

TEST_CASE("generating function models agree") {
  series g = gf_sym(6);
  CHECK(g == gf_sym_cf(6));
  CHECK(g == gf_by_dyck(6));

  // coefficient of x: a single piece, monomer y p or dimer y^2 p
  monomial m1, m2;
  m1[var::y] = 1;
  m1[var::p] = 1;
  m2[var::y] = 2;
  m2[var::p] = 1;
  CHECK(*g.coeff(1).to_polynomial() == mpoly::term(m1, 1) + mpoly::term(m2, 1));
}

TEST_CASE("catalan continued fraction equals area enumeration") {
  CHECK(catalan_cf(6) == catalan_by_area(6));
}

TEST_CASE("series coefficients match heap enumeration") {
  series g = gf_sym(5);
  std::map<int, mpoly> by_pieces;
  for (int n = 0; n <= 10; ++n)
    for (const auto& h : enumerate_sym_heaps(n)) {
      if (h.piece_size() > 5) continue;
      by_pieces[h.piece_size()] += *valuation_sym(h).divided_by(
          mpoly::variable(var::x, h.piece_size()));
    }
  // n pieces span at most 2n <= 10 points, so the sums above are complete
  for (int n = 1; n <= 5; ++n) {
    auto poly = g.coeff(n).to_polynomial();
    REQUIRE(poly.has_value());
    CHECK(*poly == by_pieces[n]);
  }
}

TEST_CASE("heap <-> matching bijection") {
  for (int n = 0; n <= 6; ++n) {
    auto heaps = enumerate_sym_heaps(n);
    std::set<std::string> seen;
    for (const auto& h : heaps) {
      sym_matching c = heap_to_matching(h);
      CHECK(static_cast<int>(c.word.size()) == n);
      CHECK(seen.insert(c.word).second);
      CHECK(matching_to_heap(c) == h);
      auto [pieces, w] = matching_weight(c);
      CHECK(pieces == h.piece_size());
      monomial expect;
      expect[var::x] = pieces;
      expect[var::y] = n;
      expect[var::p] = w;
      CHECK(valuation_sym(h) == mpoly::term(expect, 1));
    }
    CHECK(seen.size() == heaps.size());
  }
}

TEST_CASE("matching weight example") {
  auto [pieces, w] = matching_weight(sym_matching{"uuduuddu"});
  CHECK(pieces == 5);
  CHECK(w == 6);
}

TEST_CASE("matching <-> Dyck word bijection") {
  CHECK(sym_to_dyck(sym_matching{"uudu"}).word == "UDUUDDUD");
  CHECK(sym_to_dyck(sym_matching{"uduud"}).word == "UUDDUUDD");
  CHECK(sym_to_dyck(sym_matching{"uuduuddu"}).word == "UDUUDUUDDDUD");
  CHECK(dyck_to_sym(parse_path("uduududd")).word == "uudud");

  std::vector<std::pair<std::string, std::string>> table = {
      {"UUUDDD", "uudd"}, {"UUDUDD", "udud"}, {"UDUUDD", "uud"},
      {"UUDDUD", "udu"},  {"UDUDUD", "uu"}};
  for (const auto& [dyck, sym] : table) {
    CHECK(dyck_to_sym(parse_path(dyck)).word == sym);
    CHECK(sym_to_dyck(sym_matching{sym}).word == dyck);
  }

  for (int n = 0; n <= 9; ++n)
    for (const auto& c : enumerate_matchings(n)) {
      lattice_path mu = sym_to_dyck(c);
      CHECK(dyck_to_sym(mu) == c);
    }
}

TEST_CASE("validation") {
  // two maximal pieces at level 0
  sym_heap bad;
  bad.pieces = {{true, 3}, {true, 1}};
  CHECK_THROWS_AS(validate_sym_heap(bad), error);
  // more d than u in a prefix
  CHECK_THROWS_AS(validate_sym_matching(sym_matching{"du"}), error);
}
