#include <iostream>

#include <CLI11.hpp>

#include "twistframe/cli.hpp"

namespace cli = twistframe::cli;

int main(int argc, char** argv) {
  CLI::App app{"Quadratic refinements, Dehn twists and Heegaard twist certificates"};
  app.require_subcommand(1);

  std::string file;
  std::string cert_file;
  bool json = false;
  cli::SolveOptions solve_opts;
  std::string out_path;
  cli::GenerateOptions gen_opts;
  std::size_t scramble = 0;

  auto* validate = app.add_subcommand("validate", "Check a diagram document");
  validate->add_option("file", file, "Diagram document")->required();
  validate->add_flag("--json", json, "Emit the report as JSON");

  auto* solve = app.add_subcommand("solve", "Find a twist subset that kills the form on the b-curves");
  solve->add_option("file", file, "Diagram document")->required();
  solve->add_flag("--minimal", solve_opts.minimal, "Pick a minimum-weight solution");
  solve->add_flag("--json", solve_opts.json, "Print the certificate document");
  solve->add_option("--out", out_path, "Write the certificate document to this file");

  auto* verify = app.add_subcommand("verify", "Recompute a certificate against its diagram");
  verify->add_option("file", file, "Diagram document")->required();
  verify->add_option("--cert", cert_file, "Certificate document")->required();

  auto* invariant = app.add_subcommand("invariant", "Print the Gauss-sum invariant of the form");
  invariant->add_option("file", file, "Diagram document")->required();

  auto* generate = app.add_subcommand("generate", "Emit a seeded random diagram document");
  generate->add_option("--genus", gen_opts.genus, "Genus (at least 1)")->required();
  generate->add_option("--seed", gen_opts.seed, "Generator seed");
  auto* scramble_opt = generate->add_option("--scramble", scramble, "Scramble word length (default 4*genus)");
  generate->add_flag("--nonzero-targets", gen_opts.nonzero_targets, "Random b-values, at least one nonzero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsage;
  }

  if (validate->parsed()) {
    return cli::cmd_validate(file, json, std::cout, std::cerr);
  }
  if (solve->parsed()) {
    if (!out_path.empty()) {
      solve_opts.out_path = out_path;
    }
    return cli::cmd_solve(file, solve_opts, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    return cli::cmd_verify(file, cert_file, std::cout, std::cerr);
  }
  if (invariant->parsed()) {
    return cli::cmd_invariant(file, std::cout, std::cerr);
  }
  if (scramble_opt->count() > 0) {
    gen_opts.scramble = scramble;
  }
  return cli::cmd_generate(gen_opts, std::cout, std::cerr);
}
