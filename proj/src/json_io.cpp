#include "pathheaps/json_io.hpp"

#include "pathheaps/error.hpp"

namespace pathheaps {

json to_json(const lattice_path& mu) { return mu.word; }

lattice_path path_from_json(const json& j) {
  if (!j.is_string()) fail(errc::invalid_input, "path: expected a string");
  return parse_path(j.get<std::string>());
}

json to_json(const path_family& f) {
  json j;
  switch (f.k) {
    case path_family::kind::one_b:
      j["kind"] = "1b";
      j["b"] = f.param;
      j["n"] = f.n;
      break;
    case path_family::kind::a_one:
      j["kind"] = "a1";
      j["a"] = f.param;
      j["n"] = f.n;
      break;
    case path_family::kind::general:
      j["kind"] = "general";
      j["ceiling"] = f.ceiling.word;
      break;
  }
  return j;
}

path_family family_from_json(const json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "1b") return path_family::one_b(j.at("b"), j.at("n"));
  if (kind == "a1") return path_family::a_one(j.at("a"), j.at("n"));
  if (kind == "general")
    return path_family::general(parse_path(j.at("ceiling")));
  fail(errc::invalid_input, "family: kind must be 1b, a1 or general");
}

json to_json(const heap1& h) {
  json pieces = json::array();
  for (const staircase& s : h.pieces) pieces.push_back({s.l, s.r});
  return {{"family", to_json(h.family)}, {"staircases", pieces}};
}

heap1 heap1_from_json(const json& j) {
  heap1 h;
  h.family = family_from_json(j.at("family"));
  for (const json& s : j.at("staircases")) {
    if (!s.is_array() || s.size() != 2)
      fail(errc::invalid_input, "heap1: staircases must be [l, r] pairs");
    h.pieces.push_back({s[0].get<int>(), s[1].get<int>()});
  }
  validate_heap1(h);
  return h;
}

json to_json(const heap2& h) {
  return {{"lengths", h.lengths}, {"lefts", h.lefts}};
}

heap2 heap2_from_json(const json& j) {
  heap2 h;
  h.lengths = j.at("lengths").get<std::vector<int>>();
  h.lefts = j.at("lefts").get<std::vector<int>>();
  validate_heap2(h);
  return h;
}

json to_json(const sym_heap& h) {
  json pieces = json::array();
  for (const sym_piece& p : h.pieces)
    pieces.push_back({{"dimer", p.is_dimer}, {"left", p.left}});
  return {{"pieces", pieces}};
}

sym_heap sym_heap_from_json(const json& j) {
  sym_heap h;
  for (const json& p : j.at("pieces"))
    h.pieces.push_back({p.at("dimer").get<bool>(), p.at("left").get<int>()});
  validate_sym_heap(h);
  return h;
}

json to_json(const series& s) {
  json coeffs = json::array();
  for (int i = 0; i <= s.order(); ++i) {
    auto poly = s.coeff(i).to_polynomial();
    coeffs.push_back(poly ? poly->to_string() : s.coeff(i).to_string());
  }
  return {{"order", s.order()}, {"coefficients", coeffs}};
}

json to_json(const x_vector_seq& xs) { return {{"vectors", xs.vectors}}; }

json to_json(const planar_tree& t) {
  return {{"parent", t.parent}, {"levels", tree_levels(t)}};
}

}  // namespace pathheaps
