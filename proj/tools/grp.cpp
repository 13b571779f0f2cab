// grp: command-line front end over the sylowkit headers.
//
//   grp verify <group> [--oracle] [--json]
//   grp sylow <group> -p <prime>
//   grp cauchy <group> -p <prime>
//   grp orbits <group> --action conj | conj:<gens> | ltrans:<h>/<l> | sylow:<p>
//   grp quotient <group> --gens i,j [--in i,j]
//   grp catalog
//
// Exit status: 0 all checks pass, 1 a check failed, 2 bad input or usage.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sylowkit/catalog.hpp"
#include "sylowkit/suite.hpp"

namespace {

using namespace sylowkit;

struct Common {
  std::string ref;
  bool json = false;
  bool oracle = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("group", c.ref, "cyclic:n, dihedral:n, symmetric:n, q8, product:(a,b) or a Cayley table file")
      ->required();
  cmd->add_flag("--json", c.json, "emit the JSON report");
  cmd->add_flag("--oracle", c.oracle, "also run the brute-force cross-checks");
}

int emit(Report const& r, bool json) {
  if (json) std::cout << to_json(r).dump(2) << '\n';
  else print_text(std::cout, r);
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group theorem checker"};
  app.require_subcommand(1);

  Common common;
  std::uint64_t p = 0;
  std::uint64_t phi_bound = 100;
  std::string action, gens, ambient;

  auto* verify_cmd = app.add_subcommand("verify", "run the full theorem suite");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--phi-bound", phi_bound, "upper bound for the phi identities")->check(CLI::Range(2, 100000));

  auto* sylow_cmd = app.add_subcommand("sylow", "Sylow p-subgroup certificate and count");
  add_common(sylow_cmd, common);
  sylow_cmd->add_option("-p", p, "prime")->required();

  auto* cauchy_cmd = app.add_subcommand("cauchy", "element of order p");
  add_common(cauchy_cmd, common);
  cauchy_cmd->add_option("-p", p, "prime")->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit partition of an action");
  add_common(orbits_cmd, common);
  orbits_cmd->add_option("--action", action, "conj | conj:<gens> | ltrans:<h gens>/<l gens> | sylow:<p>")
      ->default_val("conj");

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient by a normal subgroup");
  add_common(quotient_cmd, common);
  quotient_cmd->add_option("--gens", gens, "generators of the normal subgroup")->required();
  quotient_cmd->add_option("--in", ambient, "generators of the ambient subgroup (default: whole group)");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the builtin groups");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (catalog_cmd->parsed()) {
      for (auto const& ref : standard_catalog())
        std::cout << ref << "  order " << build(parse_group_ref(ref)).order() << '\n';
      return 0;
    }
    auto const spec = parse_group_ref(common.ref);
    auto const g = build(spec);
    auto const name = describe(spec);
    SuiteOptions opt;
    opt.oracle = common.oracle;
    opt.phi_bound = phi_bound;

    if (verify_cmd->parsed()) return emit(verify(g, name, opt), common.json);
    if (sylow_cmd->parsed()) return emit(sylow_report(g, name, p, opt), common.json);
    if (cauchy_cmd->parsed()) return emit(cauchy_report(g, name, p, opt), common.json);
    if (orbits_cmd->parsed()) return emit(orbits_report(g, name, action, opt), common.json);
    if (quotient_cmd->parsed()) {
      auto const h = parse_gens(gens, g.order());
      auto const k = parse_gens(ambient, g.order());
      return emit(quotient_report(g, name, h, k, opt), common.json);
    }
  } catch (error const& e) {
    std::cerr << "grp: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "grp: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
