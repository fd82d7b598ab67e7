#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catkit/algebra.hpp"
#include "catkit/json_io.hpp"
#include "catkit/wcat.hpp"

using namespace catkit;
namespace io = catkit::jsonio;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitResource = 3;

struct Config {
  int max_arity = 3;
  int term_depth = 8;
  int carrier = 3;
  long long max_set_size = 100'000;
  long long max_candidates = 10'000'000;
  std::string input;
  std::string output;
  std::string exhaustive_base;
  std::vector<std::string> extent_family;
  std::string suite;
};

fincat::LexBasePtr base_by_name(const std::string& name) {
  if (name == "chain1") return fincat::make_lattice_base(fincat::chain_lattice(1), "chain1");
  if (name == "chain2") return fincat::make_lattice_base(fincat::chain_lattice(2), "chain2");
  if (name == "chain3") return fincat::make_lattice_base(fincat::chain_lattice(3), "chain3");
  if (name == "diamond") return fincat::make_lattice_base(fincat::diamond_lattice(), "diamond");
  if (name.rfind("trunc", 0) == 0) {
    const int n = std::atoi(name.c_str() + 5);
    if (n > 0) return fincat::make_trunc_base(n);
  }
  throw ParseError("unknown base name: " + name);
}

int report_lines(const std::string& label, const Report& r) {
  if (r.ok()) {
    std::cout << "PASS " << label << "\n";
    return kExitOk;
  }
  std::cout << "FAIL " << label << ": " << r.summary() << "\n";
  return kExitCheckFailed;
}

int pass_fail(const std::string& label, bool ok, const std::string& detail = "") {
  if (ok) {
    std::cout << "PASS " << label << "\n";
    return kExitOk;
  }
  std::cout << "FAIL " << label << (detail.empty() ? "" : ": " + detail) << "\n";
  return kExitCheckFailed;
}

int cmd_tabulate(const Config& cfg) {
  const io::json j = io::load_file(cfg.input);
  const algebra::Presentation p = io::presentation_from_json(j);
  const algebra::TabMonad t =
      algebra::tabulate(p, cfg.max_arity, cfg.term_depth, cfg.max_set_size);
  std::cout << "tabulated " << (t.name.empty() ? "monad" : t.name) << ": sizes";
  for (int s : t.tsize) std::cout << " " << s;
  std::cout << "\n";
  if (!cfg.output.empty()) io::save_file(cfg.output, io::tabmonad_to_json(t));
  else std::cout << io::dump_canonical(io::tabmonad_to_json(t));
  return kExitOk;
}

int roundtrip_monad(const wcat::MonadData& m) {
  int rc = report_lines("monad laws (" + m.name + ")", wcat::check_monad(m));
  if (rc != kExitOk) return rc;
  const wcat::LawvereWCat lw = wcat::theory_from_monad(m);
  rc |= report_lines("induced theory valid", wcat::check_lawvere(lw));
  const wcat::MonadData m2 = wcat::monad_from_theory(lw);
  rc |= pass_fail("monad -> theory -> monad isomorphism", wcat::monad_data_iso(m, m2));
  const wcat::LawvereWCat lw2 = wcat::theory_from_monad(m2);
  rc |= pass_fail("theory -> monad -> theory identity", wcat::lawvere_equal(lw, lw2));
  return rc;
}

int cmd_roundtrip(const Config& cfg) {
  if (!cfg.exhaustive_base.empty()) {
    const fincat::LexBasePtr base = base_by_name(cfg.exhaustive_base);
    if (base->kind != fincat::BaseKind::lattice)
      throw ParseError("--exhaustive-base expects a lattice name");
    int rc = kExitOk;
    for (const auto& m : wcat::enumerate_lattice_monads(base)) rc |= roundtrip_monad(m);
    return rc;
  }
  if (cfg.input.empty()) throw ParseError("roundtrip: need -i or --exhaustive-base");
  const io::json j = io::load_file(cfg.input);
  const std::string kind = io::kind_of(j);
  if (kind == "monad") return roundtrip_monad(io::monad_from_json(j));
  if (kind == "tabmonad") {
    const algebra::TabMonad t = io::tabmonad_from_json(j);
    const algebra::LawTheory l = algebra::monad_to_theory(t);
    int rc = report_lines("theory axioms", algebra::check_theory(l));
    if (rc != kExitOk) return rc;
    rc |= pass_fail("monad -> theory -> monad identity",
                    algebra::monad_equal(t, algebra::theory_to_monad(l)));
    rc |= roundtrip_monad(wcat::monad_from_tabmonad(t));
    return rc;
  }
  if (kind == "theory") {
    const algebra::LawTheory l = io::theory_from_json(j);
    int rc = report_lines("theory axioms", algebra::check_theory(l));
    if (rc != kExitOk) return rc;
    const algebra::TabMonad t = algebra::theory_to_monad(l);
    rc |= report_lines("Kleisli laws", algebra::check_kleisli(t));
    rc |= pass_fail("theory -> monad -> theory identity",
                    algebra::theory_equal(l, algebra::monad_to_theory(t)));
    return rc;
  }
  throw ParseError("roundtrip: unsupported kind \"" + kind + "\"");
}

int suite_gamma_int(const Config& cfg, const io::json& j) {
  const wcat::ParflCategory p = io::parfl_from_json(j);
  int rc = report_lines("parfl data", wcat::check_parfl(p));
  const wcat::WCategory g = wcat::gamma(p);
  rc |= report_lines("gamma is a W-category", wcat::check_wcategory(g));
  rc |= report_lines("counit is an equivalence", wcat::epsilon(p).report);
  const wcat::WFunctorData f = wcat::eta(g);
  const wcat::WCategory gg = wcat::gamma(wcat::integrate(g).parfl);
  rc |= pass_fail("unit is fully faithful", wcat::wfunctor_fully_faithful(g, gg, f));
  if (!cfg.extent_family.empty()) {
    std::vector<fincat::LexBasePtr> family;
    for (const auto& n : cfg.extent_family) family.push_back(base_by_name(n));
    rc |= report_lines("absolute tensors over family",
                       wcat::check_absolute_tensored(g, family, cfg.max_candidates));
  }
  return rc;
}

int suite_duality(const io::json& j) {
  const lexprof::LexProf1Cell w = io::prof_from_json(j);
  const auto cert = lexprof::search_left_dual(w);
  if (!cert) return pass_fail("left dual exists", false, "no certificate found");
  return report_lines("duality triangle identities", lexprof::check_duality(*cert));
}

int suite_triangle(const Config& cfg, const io::json& j) {
  algebra::TabMonad t;
  const std::string kind = io::kind_of(j);
  if (kind == "tabmonad") t = io::tabmonad_from_json(j);
  else if (kind == "presentation")
    t = algebra::tabulate(io::presentation_from_json(j), cfg.max_arity, cfg.term_depth,
                          cfg.max_set_size);
  else throw ParseError("triangle: unsupported kind \"" + kind + "\"");
  return report_lines("semantics triangle (carrier bound " + std::to_string(cfg.carrier) + ")",
                      algebra::check_triangle(t, cfg.carrier, cfg.max_candidates));
}

int cmd_check(const Config& cfg) {
  const io::json j = io::load_file(cfg.input);
  if (cfg.suite == "gamma-int") return suite_gamma_int(cfg, j);
  if (cfg.suite == "duality") return suite_duality(j);
  if (cfg.suite == "triangle") return suite_triangle(cfg, j);
  throw ParseError("unknown suite: " + cfg.suite);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lex-profunctor toolkit"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("CATKIT_MAX_CANDIDATES")) {
    const long long v = std::atoll(env);
    if (v > 0) cfg.max_candidates = v;
  }

  auto add_common = [&cfg](CLI::App* c) {
    c->add_option("--max-arity", cfg.max_arity, "arity truncation bound N");
    c->add_option("--term-depth", cfg.term_depth, "term depth bound D");
    c->add_option("--carrier", cfg.carrier, "carrier size bound k");
    c->add_option("-i,--input", cfg.input, "input JSON file");
    c->add_option("-o,--output", cfg.output, "output JSON file");
  };

  CLI::App* tab = app.add_subcommand("tabulate", "tabulate a presentation to a monad");
  add_common(tab);
  CLI::App* rt = app.add_subcommand("roundtrip", "monad <-> theory round trip check");
  add_common(rt);
  rt->add_option("--exhaustive-base", cfg.exhaustive_base,
                 "run every monad on the named lattice");
  CLI::App* chk = app.add_subcommand("check", "run a named check suite on an input");
  add_common(chk);
  chk->add_option("--suite", cfg.suite, "suite: gamma-int, duality, triangle")->required();
  chk->add_option("--extent-family", cfg.extent_family,
                  "extent family names for tensor certification")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (tab->parsed()) return cmd_tabulate(cfg);
    if (rt->parsed()) return cmd_roundtrip(cfg);
    return cmd_check(cfg);
  } catch (const StabilizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
