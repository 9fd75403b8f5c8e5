#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pathheaps/path.hpp"

using namespace pathheaps;

namespace {

lattice_path zigzag(int b, int n) {
  std::string w;
  for (int i = 0; i < n; ++i) w += "U" + std::string(b, 'D');
  return {w};
}

Int binomial(int n, int m) {
  Int r = 1;
  for (int i = 0; i < m; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("parsing and basics") {
  lattice_path mu = parse_path("udUD");
  CHECK(mu.word == "UDUD");
  CHECK(mu.ups() == 2);
  CHECK(mu.downs() == 2);
  CHECK_THROWS_AS(parse_path("UXD"), error);
  CHECK(dual_path(parse_path("UUDDD")).word == "UUUDD");
  CHECK(height_profile(parse_path("UDUDD")) == std::vector<int>{1, 2, 2});
  CHECK(peaks(parse_path("UDUUDD")) ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
}

TEST_CASE("below and area") {
  lattice_path mu0 = zigzag(2, 2);  // UDDUDD
  CHECK(is_below(mu0, mu0));
  CHECK(is_below(parse_path("DDUDUD"), mu0));
  CHECK_FALSE(is_below(parse_path("UUDDDD"), mu0));
  CHECK(area(mu0, mu0) == 0);
  CHECK(area(parse_path("DDDDUU"), mu0) == 6);
  CHECK_THROWS_AS(area(parse_path("UUDDDD"), mu0), error);
}

TEST_CASE("enumeration agrees with the count") {
  for (auto& word : {"UDD", "UDDUDD", "UDUUDD", "UDDUUDUDD"}) {
    lattice_path mu0 = parse_path(word);
    auto all = paths_below_all(mu0);
    CHECK(Int(all.size()) == count_paths_below(mu0));
    std::set<std::string> seen;
    for (auto& mu : all) {
      CHECK(is_below(mu, mu0));
      CHECK(seen.insert(mu.word).second);
    }
  }
}

TEST_CASE("Fuss-Catalan counts") {
  for (int b = 1; b <= 3; ++b)
    for (int n = 1; n <= 5; ++n) {
      Int want = binomial((b + 1) * (n + 1), n + 1) / (b * (n + 1) + 1);
      CHECK(count_paths_below(zigzag(b, n)) == want);
    }
}

TEST_CASE("paths_below iterator is lazy and ordered") {
  paths_below it(zigzag(1, 2));
  std::vector<std::string> got;
  while (auto mu = it.next()) got.push_back(mu->word);
  CHECK(got.size() == 5);
  CHECK(std::is_sorted(got.begin(), got.end()));
  CHECK_THROWS_AS(paths_below(zigzag(3, 12), 100), error);
}

TEST_CASE("step sequences") {
  // (UD^k)^n itself has boxes counted from each U to the right wall
  lattice_path top = zigzag(2, 2);
  step_sequence s = path_to_steps(top, 2);
  CHECK(s.m == std::vector<int>{4, 2, 0});
  CHECK(path_from_steps(s, 2) == top);
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n)
      for (auto& mu : paths_below_all(zigzag(k, n)))
        CHECK(path_from_steps(path_to_steps(mu, k), k) == mu);
}

TEST_CASE("a and b sequences") {
  CHECK(a_sequence(parse_path("UDDUUD")) == std::vector<int>{1, 0, 2, 1});
  CHECK(a_sequence(lattice_path{""}) == std::vector<int>{1});
  CHECK(b_sequence(parse_path("UDDUUD")) == std::vector<int>{0, 2, 2});
  CHECK(b_sequence(parse_path("DUDUDU")) == std::vector<int>{1, 2, 3});
}

TEST_CASE("families") {
  auto fam = path_family::one_b(2, 2);
  CHECK(fam.ceiling.word == "UDDUDD");
  CHECK(path_family::a_one(2, 2).ceiling.word == "UUDUUD");
  CHECK(dual_path(path_family::one_b(2, 2).ceiling) ==
        path_family::a_one(2, 2).ceiling);
}
