#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bfl_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace bfl::cli;
  CLI::App app{"Build braided Frobenius algebras from Hopf algebras and verify them exactly"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string config;
  std::string out;
  unsigned jobs = 0;
  DiagramRequest req;

  auto* verify = app.add_subcommand("verify", "run the verification suites of a config");
  verify->add_option("--config", config, "algebra and suite config (TOML)")->required();
  verify->add_option("--out", out, "write the JSON report here");
  auto* jobs_opt = verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* diagram = app.add_subcommand("diagram", "check one string-diagram equation");
  diagram->add_option("--config", config, "algebra config (TOML)")->required();
  auto* eq = diagram->add_option("--eq", req.equation, "equation name");
  auto* inl = diagram->add_option("--inline", req.inline_text, "equation \"LHS == RHS\"");
  eq->excludes(inl);
  diagram->add_option("--moves", req.moves_path, "extra equation file, searched before the built-ins");
  diagram->add_option("--out", out, "write the JSON report here");

  auto* exp = app.add_subcommand("export", "write structure maps in the tensor text format");
  exp->add_option("--config", config, "algebra config (TOML)")->required();
  exp->add_option("--out", out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  if (verify->parsed()) {
    std::optional<unsigned> j;
    if (jobs_opt->count()) j = jobs;
    return cmd_verify(config, out, j, std::cout, std::cerr);
  }
  if (diagram->parsed()) return cmd_diagram(config, req, out, std::cout, std::cerr);
  return cmd_export(config, out, std::cout, std::cerr);
}
