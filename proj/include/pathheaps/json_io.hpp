#pragma once

#include <json.hpp>

#include "pathheaps/heap1.hpp"
#include "pathheaps/heap2.hpp"
#include "pathheaps/kdim.hpp"
#include "pathheaps/series.hpp"
#include "pathheaps/symdyck.hpp"

namespace pathheaps {

// All JSON emitted by the library keeps insertion order so identical
// invocations are byte-identical.
using json = nlohmann::ordered_json;

json to_json(const lattice_path& mu);  // plain "UD..." string
lattice_path path_from_json(const json& j);

// {"kind": "1b"|"a1"|"general", "b"/"a": int, "n": int} or
// {"kind": "general", "ceiling": "UD..."}.
json to_json(const path_family& f);
path_family family_from_json(const json& j);

// {"family": {...}, "staircases": [[l,r],...]} with drop order = array order.
json to_json(const heap1& h);
heap1 heap1_from_json(const json& j);

// {"lengths": [...], "lefts": [...]}.
json to_json(const heap2& h);
heap2 heap2_from_json(const json& j);

// {"pieces": [{"dimer": bool, "left": int}, ...]} in canonical order.
json to_json(const sym_heap& h);
sym_heap sym_heap_from_json(const json& j);

// {"order": n, "coefficients": ["...", ...]} with canonical coefficient text.
json to_json(const series& s);

json to_json(const x_vector_seq& xs);
json to_json(const planar_tree& t);

}  // namespace pathheaps
