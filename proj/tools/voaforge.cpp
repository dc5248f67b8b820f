#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "voaforge/cli.hpp"

using voaforge::cli::Report;
using voaforge::cli::SessionConfig;

int main(int argc, char** argv) {
  SessionConfig cfg;
  std::string config_path;

  // load the config file first so explicit flags override its values
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  try {
    if (!config_path.empty()) voaforge::cli::load_config_file(cfg, config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"exact-arithmetic checks for chiral differential operators"};
  app.require_subcommand(1);
  std::vector<CLI::App*> subs;
  for (const char* name :
       {"check-axioms", "check-morphism", "twist", "virasoro", "sugawara",
        "jq-check", "q0-square", "brst-cohomology", "scf-check", "dirac-kernel",
        "character", "eval"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--format", cfg.format, "output format: text|json");
    sub->add_option("--system", cfg.system, "betagamma|ghost|cdo|spinor|dirac");
    sub->add_option("--algebra", cfg.algebra, "registry name, e.g. sl2, so4");
    sub->add_option("--algebra-json", cfg.algebra_json, "inline custom algebra");
    sub->add_option("--level", cfg.level, "level as a rational p/q");
    sub->add_option("--module", cfg.module, "character module: spinor|tensor");
    sub->add_option("--twist", cfg.twist, "twist choice: zero|beta");
    sub->add_option("--expr", cfg.expr, "DSL expression to evaluate");
    sub->add_option("--d", cfg.d, "dimension of the free-field system");
    sub->add_option("--dprime", cfg.dprime, "half-dimension d'");
    sub->add_option("--wmax", cfg.wmax, "maximal excitation weight");
    sub->add_option("--degree", cfg.degree, "polynomial degree cap");
    sub->add_option("--modes", cfg.modes, "mode range N");
    sub->add_option("--budget", cfg.budget, "block column budget");
    sub->add_option("--seed", cfg.seed, "basis permutation seed");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (CLI::App* sub : subs)
    if (sub->parsed()) cfg.command = sub->get_name();

  if (const char* env = std::getenv("VOAFORGE_BLOCK_BUDGET")) {
    try {
      cfg.budget = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: VOAFORGE_BLOCK_BUDGET must be an integer\n";
      return 2;
    }
  }

  try {
    Report rep = voaforge::cli::run_command(cfg);
    std::cout << voaforge::cli::emit_report(rep, cfg.format);
    if (cfg.format == "json") std::cout << "\n";
    return voaforge::cli::exit_code(rep);
  } catch (const voaforge::cli::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const voaforge::cli::UnknownSymbolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const voaforge::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
