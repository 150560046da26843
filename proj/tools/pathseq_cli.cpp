// pathseq: path-sequence invariants of graphs and (generalized) starlike trees.

#include <iostream>

#include <CLI11.hpp>

#include "pathseq/cli.hpp"

namespace {

void add_sources(CLI::App* cmd, pathseq::cli::RunConfig& cfg) {
  cmd->add_option("--graph", cfg.graph_paths, "edge-list file");
  cmd->add_option("--starlike", cfg.starlike_paths, "starlike JSON spec");
  cmd->add_option("--generalized", cfg.generalized_paths, "generalized starlike JSON spec");
}

void add_index(CLI::App* cmd, pathseq::cli::RunConfig& cfg) {
  cmd->add_option("--index", cfg.index,
                  "connectivity | sum-connectivity | hyper-zagreb | path-count | power:<alpha>")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pathseq::cli;
  RunConfig cfg;
  CLI::App app{"Higher-order path-sequence invariants"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--tol", cfg.tol, "comparison tolerance")->capture_default_str();
  app.add_option("--format", cfg.format, "json | csv")->capture_default_str();
  app.add_option("--budget", cfg.budget, "cap on path-extension steps")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized symmetry checks")
      ->capture_default_str();
  app.add_option("--output", cfg.output, "write the report here instead of stdout");

  auto* invariant = app.add_subcommand("invariant", "value of the order-h invariant");
  add_sources(invariant, cfg);
  add_index(invariant, cfg);
  invariant->add_option("--order", cfg.order, "path length h");

  auto* profile = app.add_subcommand("profile", "invariant for h = 0..min(max-order, rho)");
  add_sources(profile, cfg);
  add_index(profile, cfg);
  profile->add_option("--max-order", cfg.max_order, "largest h");

  auto* census = app.add_subcommand("census", "degree-sequence census of length-h paths");
  add_sources(census, cfg);
  census->add_option("--order", cfg.order, "path length h");

  auto* verify = app.add_subcommand("verify", "closed form against path enumeration");
  add_sources(verify, cfg);
  add_index(verify, cfg);
  verify->add_option("--max-order", cfg.max_order, "largest h");

  auto* reconstruct = app.add_subcommand("reconstruct", "recover a tree from its profile");
  add_sources(reconstruct, cfg);
  add_index(reconstruct, cfg);
  reconstruct->add_option("--profile", cfg.profile_path, R"(JSON {"n":..,"values":[..]})");
  reconstruct->add_option("--family", cfg.family, "starlike | generalized")->capture_default_str();
  reconstruct->add_option("--max-degree", cfg.max_degree, "r for the generalized family");

  auto* distinguish = app.add_subcommand("distinguish", "first order separating two trees");
  add_sources(distinguish, cfg);
  add_index(distinguish, cfg);

  auto* conditions = app.add_subcommand("check-conditions", "scan the distinguishing conditions");
  add_index(conditions, cfg);
  conditions->add_option("--theorem", cfg.theorem, "7 (fixed n) or 8 (fixed n and r)")
      ->capture_default_str();
  conditions->add_option("--x-max", cfg.x_max, "largest degree scanned")->capture_default_str();
  conditions->add_option("--t-max", cfg.t_max, "largest run of 2s scanned")->capture_default_str();

  auto* survey = app.add_subcommand("survey", "pairwise comparison of a whole family");
  add_index(survey, cfg);
  survey->add_option("--family", cfg.family, "starlike | generalized")->capture_default_str();
  survey->add_option("--vertices", cfg.vertices, "n");
  survey->add_option("--max-degree", cfg.max_degree, "r for the generalized family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  const RunResult result = run(cfg);
  if (result.exit_code == kExitUsageError) {
    std::cerr << "error: " << result.diagnostic << "\n";
    return result.exit_code;
  }
  if (cfg.output && result.exit_code != kExitDomainError) {
    try {
      write_atomically(*cfg.output, result.document);
    } catch (const pathseq::Error& e) {
      std::cout << error_document(e.kind(), e.what()).dump() << "\n";
      return kExitDomainError;
    }
  } else {
    std::cout << result.document;
  }
  return result.exit_code;
}
