// tautcalc: verify class identities, evaluate expressions, list strata.
//
// Exit status: 0 success / all checks pass, 1 some check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tautcalc/expand.hpp"
#include "tautcalc/expr_parser.hpp"
#include "tautcalc/json_io.hpp"
#include "tautcalc/pairing.hpp"
#include "tautcalc/pencil_family.hpp"
#include "tautcalc/verification.hpp"
#include "tautcalc/witten.hpp"

namespace {

using namespace tautcalc;
using Json = nlohmann::json;

constexpr int kUsage = 2;

struct Globals {
  std::string cache;
  int jobs = 0;
  bool pretty = false;
  bool json_flag = false;
  int indent() const { return pretty ? 2 : -1; }
};

MarkedSpace parse_space(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--space expects g,n");
  std::size_t used = 0;
  MarkedSpace s;
  try {
    s.g = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = text.substr(comma + 1);
    s.n = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--space expects g,n, got '" + text + "'");
  }
  s.validate();
  return s;
}

Json space_json(MarkedSpace s) { return {{"g", s.g}, {"n", s.n}}; }

int cmd_verify(const Globals& g, const std::vector<std::string>& requested) {
  std::vector<std::string> names;
  for (const std::string& n : requested) {
    if (n == "all") {
      names = Verifier::check_names();
      break;
    }
    if (!Verifier::known(n)) {
      std::cerr << "tautcalc: unknown check '" << n << "'\n";
      return kUsage;
    }
    names.push_back(n);
  }
  if (names.empty()) names = Verifier::check_names();

  CheckOptions opts;
  opts.jobs = g.jobs;
  Verifier v(opts);
  bool all_pass = true;
  for (const std::string& n : names) {
    const VerificationReport r = v.run(n);
    all_pass = all_pass && r.pass;
    std::cout << tautcalc::json::dump_report(r, g.indent()) << '\n' << std::flush;
  }
  return all_pass ? 0 : 1;
}

struct EvalArgs {
  std::string space = "2,0";
  std::string expr;
  bool expand = false;
  bool integrate = false;
  std::optional<std::string> pair_with;
};

int cmd_eval(const Globals& g, const EvalArgs& a) {
  const MarkedSpace space = parse_space(a.space);
  const int actions = int(a.expand) + int(a.integrate) + int(a.pair_with.has_value());
  if (actions != 1) throw std::invalid_argument("choose exactly one of --expand, --integrate, --pair");

  const TautClass x = expand(parse_expr(a.expr, space), space);
  if (a.expand) {
    std::cout << tautcalc::json::dump_class(x, g.indent()) << '\n';
    return 0;
  }
  Json out{{"space", space_json(space)}, {"expr", a.expr}};
  if (a.integrate) {
    out["action"] = "integrate";
    out["value"] = to_string(integrate(x));
  } else {
    const TautClass y = expand(parse_expr(*a.pair_with, space), space);
    out["action"] = "pair";
    out["with"] = *a.pair_with;
    out["value"] = to_string(pair(x, y));
  }
  std::cout << out.dump(g.indent()) << '\n';
  return 0;
}

int cmd_strata(const Globals& g, int genus, int n, int codim, bool decorated) {
  const MarkedSpace space{genus, n};
  space.validate();
  std::cout << tautcalc::json::dump_strata(space, codim, decorated, g.indent()) << '\n';
  return 0;
}

Json lattice_json(const family::LatticeClass& c) { return {{"H", c.h}, {"E", c.e}, {"F", c.f}}; }

int cmd_testfamily(const Globals& g) {
  Json table = Json::object();
  for (const char* name : {"psi1", "delta_irr", "lambda", "d0:{2,3}", "d1:{1}", "d1:0"})
    table[name] = lattice_json(family::restrict_divisor(name));
  const family::FamilyNumbers f = family::family_numbers();
  Json out{{"restrictions", table},
           {"intersections",
            {{"rho3_hyp21_dot_pi3_hyp22", to_string(f.product)},
             {"rho3_hyp21_dot_pi3_hyp22_from_restricted_polynomials", to_string(f.product_printed)},
             {"pi3_hyp22_dot_d0_23", to_string(f.with_delta)},
             {"pi3_hyp22_dot_d0_23_from_restricted_polynomials", to_string(f.with_delta_printed)},
             {"xi1_degree", f.xi_degree}}}};
  int status = 0;
  try {
    const family::Multiplicities m = family::solve_multiplicities(f.product, f.with_delta, f.xi_degree);
    out["multiplicities"] = {{"alpha", m.alpha}, {"beta", m.beta}, {"gamma", m.gamma}, {"delta", m.delta}};
  } catch (const std::domain_error& e) {
    out["error"] = e.what();
    status = 1;
  }
  std::cout << out.dump(g.indent()) << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tautological-ring calculator for Mbar_{g,n}, g <= 2, n <= 3"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--cache", g.cache, "tau cache file (read at start, written at exit)")->envname("TAUTCALC_CACHE");
  app.add_option("--jobs", g.jobs, "threads for pairing loops (0: all cores)")
      ->envname("TAUTCALC_JOBS")
      ->check(CLI::NonNegativeNumber);
  auto* pretty = app.add_flag("--pretty", g.pretty, "indented JSON")->envname("TAUTCALC_PRETTY");
  app.add_flag("--json", g.json_flag, "compact JSON (default)")->excludes(pretty);

  auto* verify = app.add_subcommand("verify", "run named checks, or all");
  std::vector<std::string> names;
  verify->add_option("names", names, "check names or 'all'");

  auto* eval = app.add_subcommand("eval", "expand, integrate or pair a class expression");
  EvalArgs ea;
  eval->add_option("--space", ea.space, "ambient space g,n")->envname("TAUTCALC_SPACE");
  eval->add_flag("--expand", ea.expand, "print the strata expansion");
  eval->add_flag("--integrate", ea.integrate, "print the degree");
  eval->add_option("--pair", ea.pair_with, "pair with a second expression");
  eval->add_option("expr", ea.expr, "class expression")->required();

  auto* strata = app.add_subcommand("strata", "list strata of a given codimension");
  int sg = 0, sn = 0, codim = 0;
  bool decorated = false;
  strata->add_option("g", sg)->required();
  strata->add_option("n", sn)->required();
  strata->add_option("codim", codim)->required();
  strata->add_flag("--decorated", decorated, "include psi and kappa decorations");

  auto* testfamily = app.add_subcommand("testfamily", "intersection numbers on the cubic-pencil family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (!g.cache.empty()) witten::load_cache(g.cache);
    int status = 0;
    if (*verify) status = cmd_verify(g, names);
    if (*eval) status = cmd_eval(g, ea);
    if (*strata) status = cmd_strata(g, sg, sn, codim, decorated);
    if (*testfamily) status = cmd_testfamily(g);
    if (!g.cache.empty()) witten::save_cache(g.cache);
    return status;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tautcalc: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "tautcalc: internal error: " << e.what() << '\n';
    return kUsage;
  }
}
