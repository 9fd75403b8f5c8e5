#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathheaps/error.hpp"
#include "pathheaps/heap1.hpp"
#include "pathheaps/heap2.hpp"
#include "pathheaps/json_io.hpp"
#include "pathheaps/kappa.hpp"
#include "pathheaps/kdim.hpp"
#include "pathheaps/qseries.hpp"
#include "pathheaps/symdyck.hpp"
#include "pathheaps/verify.hpp"

namespace {

using pathheaps::json;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

// Shared family flags for `enumerate heaps1` / `gf type1`.
struct family_opts {
  std::string kind = "1b";
  int b = 1, a = 1, n = 1;
  std::string ceiling;
  CLI::Option* kind_opt = nullptr;

  void attach(CLI::App* cmd) {
    kind_opt = cmd->add_option("--family", kind, "family kind: 1b, a1 or general")
                   ->check(CLI::IsMember({"1b", "a1", "general"}));
    cmd->add_option("--b", b, "b for the (1,b) family");
    cmd->add_option("--a", a, "a for the (a,1) family");
    cmd->add_option("--n", n, "size of the family");
    cmd->add_option("--ceiling", ceiling, "ceiling word for a general family");
  }

  pathheaps::path_family build() const {
    // a bare --ceiling implies a general family
    std::string k = kind;
    if (kind_opt && kind_opt->count() == 0 && !ceiling.empty()) k = "general";
    if (k == "a1") return pathheaps::path_family::a_one(a, n);
    if (k == "1b") return pathheaps::path_family::one_b(b, n);
    if (ceiling.empty())
      pathheaps::fail(pathheaps::errc::invalid_input,
                      "a general family needs --ceiling");
    return pathheaps::path_family::general(pathheaps::parse_path(ceiling));
  }
};

int run(int argc, char** argv) {
  CLI::App app{"heaps of pieces for lattice paths"};
  app.require_subcommand(1);
  app.fallthrough();
  int order = 8;
  std::int64_t cap = 10'000'000;
  unsigned seed = 42;
  bool json_flag = false;
  app.add_option("--order", order, "series truncation order")
      ->capture_default_str();
  app.add_option("--cap", cap, "enumeration size cap")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized checks")
      ->capture_default_str();
  app.add_flag("--json", json_flag, "emit JSON (always on)");

  // ---- enumerate -------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "list combinatorial objects");
  enumerate->require_subcommand(1);

  auto* en_paths = enumerate->add_subcommand("paths", "paths below a ceiling");
  family_opts en_paths_fam;
  en_paths_fam.attach(en_paths);
  en_paths->callback([&] {
    auto mu0 = en_paths_fam.build().ceiling;
    json out;
    out["ceiling"] = mu0.word;
    out["count"] = pathheaps::count_paths_below(mu0).str();
    json arr = json::array();
    for (auto& mu : pathheaps::paths_below_all(mu0, cap))
      arr.push_back(mu.word);
    out["paths"] = arr;
    emit(out);
  });

  auto* en_h1 = enumerate->add_subcommand("heaps1", "type-I heaps of a family");
  family_opts en_h1_fam;
  en_h1_fam.attach(en_h1);
  en_h1->callback([&] {
    auto fam = en_h1_fam.build();
    json out;
    out["family"] = pathheaps::to_json(fam);
    json arr = json::array();
    for (auto& mu : pathheaps::paths_below_all(fam.ceiling, cap)) {
      auto h = pathheaps::heap1_from_path(mu, fam);
      json e = pathheaps::to_json(h);
      e["path"] = mu.word;
      e["valuation"] = pathheaps::valuation1(h).to_string();
      arr.push_back(e);
    }
    out["heaps"] = arr;
    out["gf"] = pathheaps::gf_type1(fam, cap).to_string();
    emit(out);
  });

  auto* en_h2 = enumerate->add_subcommand("heaps2", "type-II heaps by lengths");
  std::string en_a, en_eval;
  en_h2->add_option("--a", en_a, "length profile, comma separated")->required();
  en_h2->add_option("--eval", en_eval, "evaluate the gf, e.g. p=1");
  en_h2->callback([&] {
    auto lengths = parse_int_list(en_a);
    pathheaps::mpoly g = pathheaps::gf_g(lengths);
    json out;
    out["a"] = lengths;
    out["gf"] = g.to_string();
    if (!en_eval.empty()) {
      if (en_eval != "p=1")
        pathheaps::fail(pathheaps::errc::invalid_input,
                        "--eval supports only p=1");
      out["eval"] = g.eval_ones().str();
    }
    emit(out);
  });

  auto* en_sym = enumerate->add_subcommand("symdyck", "monomer/dimer heaps");
  int en_points = 0;
  en_sym->add_option("--points", en_points, "number of points")->required();
  en_sym->callback([&] {
    json out;
    out["points"] = en_points;
    json arr = json::array();
    for (auto& h : pathheaps::enumerate_sym_heaps(en_points, cap)) {
      json e = pathheaps::to_json(h);
      e["matching"] = pathheaps::heap_to_matching(h).word;
      e["valuation"] = pathheaps::valuation_sym(h).to_string();
      arr.push_back(e);
    }
    out["heaps"] = arr;
    emit(out);
  });

  // ---- gf ---------------------------------------------------------------
  auto* gf = app.add_subcommand("gf", "generating functions");
  gf->require_subcommand(1);

  auto* gf1 = gf->add_subcommand("type1", "type-I heap generating function");
  family_opts gf1_fam;
  gf1_fam.attach(gf1);
  gf1->callback([&] {
    auto fam = gf1_fam.build();
    json out;
    out["family"] = pathheaps::to_json(fam);
    out["gf"] = pathheaps::gf_type1(fam, cap).to_string();
    emit(out);
  });

  auto* gf2 = gf->add_subcommand("type2", "type-II heap generating function");
  std::string gf2_a, gf2_via = "direct";
  gf2->add_option("--a", gf2_a, "length profile, comma separated")->required();
  gf2->add_option("--via", gf2_via, "direct or det")
      ->check(CLI::IsMember({"direct", "det"}));
  gf2->callback([&] {
    auto lengths = parse_int_list(gf2_a);
    json out;
    out["a"] = lengths;
    out["via"] = gf2_via;
    out["gf"] = (gf2_via == "det" ? pathheaps::gf_g_det(lengths)
                                  : pathheaps::gf_g(lengths))
                    .to_string();
    emit(out);
  });

  auto* gfq = gf->add_subcommand("qseries", "Fuss-Catalan area series");
  int gfq_k = 1;
  std::string gfq_check;
  gfq->add_option("--k", gfq_k, "ceiling parameter k")->required();
  gfq->add_option("--check", gfq_check, "ratio, area, funceq or heapsum")
      ->check(CLI::IsMember({"ratio", "area", "funceq", "heapsum"}));
  gfq->callback([&] {
    json out;
    out["k"] = gfq_k;
    out["order"] = order;
    if (gfq_check == "area")
      out["gf"] =
          pathheaps::to_json(pathheaps::gf_fuss_catalan_by_area(gfq_k, order));
    else
      out["gf"] = pathheaps::to_json(pathheaps::gf_fuss_catalan(gfq_k, order));
    if (!gfq_check.empty()) {
      bool pass;
      if (gfq_check == "funceq")
        pass = pathheaps::check_functional_equation(gfq_k, order);
      else if (gfq_check == "heapsum")
        pass = pathheaps::heap_sum_check(gfq_k, std::min(order, 5));
      else
        pass = pathheaps::gf_fuss_catalan(gfq_k, order) ==
               pathheaps::gf_fuss_catalan_by_area(gfq_k, order);
      out["check"] = gfq_check;
      out["pass"] = pass;
    }
    emit(out);
  });

  auto* gfk = gf->add_subcommand("kdim", "planar-tree series F(k)");
  int gfk_k = 1;
  gfk->add_option("--k", gfk_k, "dimension parameter k")->required();
  gfk->callback([&] {
    json out;
    out["k"] = gfk_k;
    out["gf"] = pathheaps::to_json(pathheaps::gf_f(gfk_k, order, cap));
    emit(out);
  });

  auto* gfs = gf->add_subcommand("symdyck", "symmetric Dyck path series");
  std::string gfs_via = "ratio";
  gfs->add_option("--via", gfs_via, "ratio, cf, matchings or dyck")
      ->check(CLI::IsMember({"ratio", "cf", "matchings", "dyck"}));
  gfs->callback([&] {
    json out;
    out["via"] = gfs_via;
    if (gfs_via == "ratio")
      out["gf"] = pathheaps::to_json(pathheaps::gf_sym(order));
    else if (gfs_via == "cf")
      out["gf"] = pathheaps::to_json(pathheaps::gf_sym_cf(order));
    else if (gfs_via == "dyck")
      out["gf"] = pathheaps::to_json(pathheaps::gf_by_dyck(order));
    else
      out["gf"] = pathheaps::gf_by_matchings(order).to_string();
    emit(out);
  });

  // ---- bijection ---------------------------------------------------------
  auto* bij = app.add_subcommand("bijection", "apply a bijection");
  bij->require_subcommand(1);

  auto* bk = bij->add_subcommand("kappa", "type-I <-> type-II heaps");
  std::string bk_heap, bk_dir = "forward";
  int bk_b = 1;
  bk->add_option("--heap", bk_heap, "heap as JSON")->required();
  bk->add_option("--direction", bk_dir, "forward or inverse")
      ->check(CLI::IsMember({"forward", "inverse"}));
  bk->add_option("--b", bk_b, "b parameter (inverse direction)");
  bk->callback([&] {
    json out;
    if (bk_dir == "forward") {
      auto h = pathheaps::heap1_from_json(json::parse(bk_heap));
      out["input"] = pathheaps::to_json(h);
      out["image"] = pathheaps::to_json(pathheaps::kappa(h));
    } else {
      auto h = pathheaps::heap2_from_json(json::parse(bk_heap));
      out["input"] = pathheaps::to_json(h);
      out["image"] = pathheaps::to_json(pathheaps::kappa_inv(h, bk_b));
    }
    emit(out);
  });

  auto* be = bij->add_subcommand("eta", "type-I heap duality");
  std::string be_heap;
  be->add_option("--heap", be_heap, "type-I heap as JSON")->required();
  be->callback([&] {
    auto h = pathheaps::heap1_from_json(json::parse(be_heap));
    json out;
    out["input"] = pathheaps::to_json(h);
    out["image"] = pathheaps::to_json(pathheaps::eta(h));
    emit(out);
  });

  auto* bs = bij->add_subcommand("sym-dyck", "matching word <-> Dyck word");
  std::string bs_word, bs_dir = "to-dyck";
  bs->add_option("--word", bs_word, "u/d matching word or U/D Dyck word")
      ->required();
  bs->add_option("--direction", bs_dir, "to-dyck or to-sym")
      ->check(CLI::IsMember({"to-dyck", "to-sym"}));
  bs->callback([&] {
    json out;
    out["input"] = bs_word;
    if (bs_dir == "to-dyck")
      out["image"] = pathheaps::sym_to_dyck({bs_word}).word;
    else
      out["image"] =
          pathheaps::dyck_to_sym(pathheaps::parse_path(bs_word)).word;
    emit(out);
  });

  // ---- kdim ----------------------------------------------------------------
  auto* kd = app.add_subcommand("kdim", "k+1-dimensional heap encodings");
  int kd_k = 1, kd_n = 1;
  bool kd_count = false, kd_check = false;
  std::string kd_steps;
  kd->add_option("--k", kd_k, "dimension parameter k")->required();
  kd->add_option("--n", kd_n, "path size n");
  kd->add_flag("--count-trees", kd_count, "count distinct x-vector sequences");
  kd->add_flag("--check-identity", kd_check, "check F(k) = G(x/p)");
  kd->add_option("--decompose,--steps", kd_steps,
                 "step sequence, comma separated");
  kd->callback([&] {
    json out;
    out["k"] = kd_k;
    if (kd_count) {
      out["n"] = kd_n;
      out["trees"] = pathheaps::count_trees(kd_k, kd_n, cap);
    } else if (kd_check) {
      pathheaps::monomial pinv;
      pinv[pathheaps::var::p] = -1;
      bool pass =
          pathheaps::gf_f(kd_k, order, cap) ==
          pathheaps::gf_fuss_catalan(kd_k, order)
              .scaled_x(pathheaps::rational(pathheaps::mpoly::term(pinv, 1)));
      out["order"] = order;
      out["pass"] = pass;
    } else if (!kd_steps.empty()) {
      pathheaps::step_sequence m{parse_int_list(kd_steps)};
      json parts = json::array();
      for (auto& d : pathheaps::decompose_steps(m, kd_k)) parts.push_back(d.m);
      auto xs = pathheaps::x_vectors(m, kd_k);
      out["steps"] = m.m;
      out["decomposition"] = parts;
      out["x_vectors"] = pathheaps::to_json(xs);
      out["tree"] = pathheaps::to_json(pathheaps::build_tree(xs, kd_k));
      out["valuation"] = pathheaps::tree_valuation(xs, kd_k);
    } else {
      pathheaps::fail(pathheaps::errc::invalid_input,
                      "choose --count-trees, --check-identity or --decompose");
    }
    emit(out);
  });

  // ---- verify ---------------------------------------------------------------
  auto* vf = app.add_subcommand("verify", "run the consistency suite");
  std::string vf_suite = "paper";
  vf->add_option("--suite", vf_suite, "suite name (paper)")
      ->check(CLI::IsMember({"paper"}));
  bool verify_failed = false;
  vf->callback([&] {
    auto results = pathheaps::run_verify_suite(order);
    json checks = json::array();
    for (auto& r : results) {
      checks.push_back({{"name", r.name},
                        {"status", r.pass ? "pass" : "fail"},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs}});
      if (!r.pass) verify_failed = true;
    }
    emit({{"suite", vf_suite}, {"checks", checks}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return verify_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pathheaps::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
