// uqpa: exact checks for the restricted quantum group at q = exp(i pi / p).

#include <CLI11.hpp>

#include <iostream>

#include "uqpa/report.hpp"

int main(int argc, char** argv) {
  using namespace uqpa;
  CLI::App app{"Exact relation checks, dimension tables and reports"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  std::string convention;
  app.add_option("--p", cfg.ps, "values of p (repeat or comma separated)")
      ->delimiter(',')
      ->default_str("2,3");
  app.add_option("--max-n", cfg.max_n, "largest n for dims (default 6) and conjecture (default 10)");
  app.add_option("--relations", cfg.relations, "relation ids, comma separated, or 'all'")->delimiter(',');
  app.add_option("--budget", cfg.budget, "largest state space materialized")->capture_default_str();
  app.add_option("--format", format, "json | markdown | csv")
      ->check(CLI::IsMember({"json", "markdown", "md", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "write the report here instead of stdout");
  app.add_option("--floor-convention", convention, "euclidean | truncate | zero (default: all)");
  app.add_option("--oracle-max-n", cfg.oracle_max_n, "largest n handed to the commutant solver")
      ->capture_default_str();
  app.add_flag("--timing", cfg.timing, "record elapsed_ms (makes output run dependent)");
  app.add_option("--threads", cfg.threads, "worker threads for verify (0: hardware)");

  for (const char* name : {"verify", "dims", "conjecture", "hom", "basis", "all"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("verify")->description("check the generator relations and propositions");
  app.get_subcommand("dims")->description("fusion dimensions against the commutant oracle");
  app.get_subcommand("conjecture")->description("closed-form conjecture under each floor convention");
  app.get_subcommand("hom")->description("module validity, hom-space dimensions, explicit maps");
  app.get_subcommand("basis")->description("the 2p-strand basis list");
  app.get_subcommand("all")->description("every report above plus the identity suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  cfg.command = *parse_command(app.get_subcommands().front()->get_name());
  cfg.format = *parse_format(format);
  if (!convention.empty()) {
    cfg.convention = parse_convention(convention);
    if (!cfg.convention) {
      std::cerr << "unknown floor convention: " << convention << "\n";
      return kExitUsage;
    }
  }
  return run(cfg).exit_code;
}
