#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using toric::cli::Format;
  toric::cli::RunConfig config;

  CLI::App app{"Regular triangulations, Chow and Hurwitz polytopes of lattice polytopes"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--input", config.input, "Polytope file {\"vertices\": [[int,...],...]}")
      ->required();
  app.add_option("--seed", config.seed, "Seed for the randomized checks")->capture_default_str();
  app.add_option("--trials", config.trials, "Random trials per check")->capture_default_str();
  app.add_option("--max-triangulations", config.max_triangulations,
                 "Abort (exit 3) beyond this many regular triangulations")
      ->capture_default_str();
  app.add_option("--time-budget", config.time_budget_seconds,
                 "Abort (exit 3) when enumeration exceeds this many seconds");
  const std::map<std::string, Format> formats{{"human", Format::human},
                                              {"machine", Format::machine}};
  app.add_option("--format", config.format, "human | machine")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--skip-delzant-check", config.skip_delzant_check,
               "Do not test smoothness or warn about it");

  app.add_subcommand("check", "Validity, Delzant test, volumes and degrees");
  app.add_subcommand("triangulations", "Regular triangulations with witness liftings");
  app.add_subcommand("vectors", "GKZ / boundary / Hurwitz vectors per triangulation")
      ->add_option("--kind", config.kind, "gkz | boundary | hurwitz | all");
  app.add_subcommand("polytope", "Chow and Hurwitz polytopes")
      ->add_option("--kind", config.kind, "chow | hurwitz | all");
  app.add_subcommand("verify", "Pairing identities and support checks; exit 0 iff all pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toric::cli::input_error;
  }
  config.command = app.get_subcommands().front()->get_name();
  return toric::cli::run(config, std::cout, std::cerr);
}
