// apw: exact apolarity workbench for subcanonical curves on rational
// normal surfaces. All subcommands are deterministic given --seed.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apw/cli.hpp"
#include "apw/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact apolarity workbench: apolar ideals, Artinian Gorenstein "
               "reductions, Macaulay dual forms, Fermat certificates"};
  app.require_subcommand(1);
  // global flags remain usable after the subcommand name
  app.fallthrough();

  apw::RunConfig config;
  std::string format = "text";
  app.add_option("--seed", config.seed, "random seed (default 0)")
      ->capture_default_str();
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--degree-cap", config.degree_cap,
                 "override the degreewise computation cap");
  app.add_option("--max-attempts", config.max_attempts,
                 "retry budget for genericity-dependent steps")
      ->capture_default_str();

  std::string poly_text;
  auto* perp_cmd = app.add_subcommand(
      "perp", "apolar ideal of a form: dimensions, generators, Hilbert function");
  perp_cmd->add_option("form", poly_text, "homogeneous form, e.g. \"x0^4+x1^4\"")
      ->required();

  auto* hf_cmd = app.add_subcommand("hf", "Hilbert function of the apolar algebra");
  hf_cmd->add_option("form", poly_text)->required();

  std::vector<std::string> generators;
  int socle_degree = 0;
  auto* dual_cmd = app.add_subcommand(
      "dual", "Macaulay dual socle generator of an Artinian Gorenstein ideal");
  dual_cmd->add_option("generators", generators, "ideal generators in d-variables")
      ->required();
  dual_cmd->add_option("--socle-degree", socle_degree, "socle degree")->required();

  auto* fermat_cmd =
      app.add_subcommand("fermat", "decide Fermat-equivalence of a form");
  fermat_cmd->add_option("form", poly_text)->required();

  std::vector<std::string> points;
  auto* apolar_cmd = app.add_subcommand(
      "apolar", "check a point scheme against a form (Apolarity Lemma)");
  apolar_cmd->add_option("--point", points, "point coordinates, e.g. \"1,0,-1\"")
      ->required();
  apolar_cmd->add_option("form", poly_text)->required();

  int s = 2, a1 = 1, a2 = 1, m = 1;
  auto* scroll_cmd =
      app.add_subcommand("scroll", "rational normal scroll S(a1,a2) data");
  scroll_cmd->add_option("--a1", a1)->required();
  scroll_cmd->add_option("--a2", a2)->required();

  auto* inv_cmd = app.add_subcommand(
      "invariants", "genus, degree and flags of the subcanonical curve class");
  inv_cmd->add_option("--s", s)->required();
  inv_cmd->add_option("--a1", a1)->required();
  inv_cmd->add_option("--a2", a2)->required();

  std::string surface = "scroll";
  auto* cut_cmd = app.add_subcommand(
      "cut", "rational points cut out by two linear forms on a surface");
  cut_cmd->add_option("--surface", surface, "scroll or veronese")
      ->capture_default_str();
  cut_cmd->add_option("--a1", a1);
  cut_cmd->add_option("--a2", a2);
  cut_cmd->add_option("--m", m);

  std::string kind, regime = "both";
  auto* verify_cmd = app.add_subcommand(
      "verify", "end-to-end theorem verification with per-trial reports");
  verify_cmd->add_option("kind", kind, "scroll-fermat or plane-waring")
      ->required();
  verify_cmd->add_option("--s", s)->capture_default_str();
  verify_cmd->add_option("--a1", a1);
  verify_cmd->add_option("--a2", a2);
  verify_cmd->add_option("--m", m);
  verify_cmd->add_option("--trials", config.trials)->capture_default_str();
  verify_cmd->add_option("--regime", regime, "rational, generic or both")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : apw::kExitInputError;
  }

  config.format =
      format == "json" ? apw::OutputFormat::Json : apw::OutputFormat::Text;

  try {
    if (perp_cmd->parsed()) return apw::cmd_perp(poly_text, config, std::cout);
    if (hf_cmd->parsed()) return apw::cmd_hf(poly_text, config, std::cout);
    if (dual_cmd->parsed())
      return apw::cmd_dual(generators, socle_degree, config, std::cout);
    if (fermat_cmd->parsed())
      return apw::cmd_fermat(poly_text, config, std::cout);
    if (apolar_cmd->parsed())
      return apw::cmd_apolar(points, poly_text, config, std::cout);
    if (scroll_cmd->parsed()) return apw::cmd_scroll(a1, a2, config, std::cout);
    if (inv_cmd->parsed())
      return apw::cmd_invariants(s, a1, a2, config, std::cout);
    if (cut_cmd->parsed())
      return apw::cmd_cut(surface, a1, a2, m, config, std::cout);
    if (verify_cmd->parsed())
      return apw::cmd_verify(kind, s, a1, a2, m, regime, config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return apw::exit_code_for(e);
  }
  return apw::kExitInputError;
}
