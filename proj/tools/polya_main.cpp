#include <iostream>

#include "CLI11.hpp"
#include "polya/cli/commands.hpp"
#include "polya/cli/config.hpp"

using polya::cli::Command;
using polya::cli::Format;
using polya::cli::RunConfig;

namespace {

template <class T>
void bind(CLI::App& app, const char* flag, std::optional<T>& slot, const char* help) {
  app.add_option_function<T>(flag, [&slot](const T& v) { slot = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polya states: distributions, ladder algebra, statistics and limits"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";

  const std::vector<std::pair<Command, const char*>> commands{
      {Command::pmf, "photon-number distribution: n, P_n, log P_n"},
      {Command::state, "a^k on the state: direct vs closed form (--k)"},
      {Command::moments, "moments and Mandel Q, closed form vs direct sums"},
      {Command::qline, "Q against eta at fixed (M, gamma) with the zero crossing"},
      {Command::squeeze, "quadrature variances on the (gamma, eta) grid"},
      {Command::limits, "convergence to the binomial (bs) or negative binomial (nbs) law"},
      {Command::urn, "urn Monte Carlo histogram against the exact pmf"},
      {Command::verify, "invariant suite on the standard grid"},
  };
  for (const auto& [cmd, help] : commands) {
    auto* sub = app.add_subcommand(polya::cli::to_string(cmd), help);
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
    if (cmd == Command::squeeze)
      sub->add_option("--M", config.M, "number of modes (repeatable)");
    else
      sub->add_option_function<int>("--M", [&config](int v) { config.M = {v}; }, "number of modes");
    bind(*sub, "--gamma", config.gamma, "reinforcement parameter");
    bind(*sub, "--eta", config.eta, "success probability");
    bind(*sub, "--points", config.points, "number of sample points");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bind(*sub, "--out", config.out, "output file (default stdout)");
    bind(*sub, "--seed", config.seed, "random seed");
    bind(*sub, "--trials", config.trials, "Monte Carlo trials");
    bind(*sub, "--lambda", config.lambda, "mean photon number of the nbs limit");
    bind(*sub, "--rho", config.rho, "shape of the nbs limit");
    bind(*sub, "--k", config.k, "power of the annihilation operator");
    bind(*sub, "--kind", config.kind, "limit kind: bs or nbs");
    if (cmd == Command::verify) bind(*sub, "--grid", config.grid, "grid config (JSON)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0 through the same path.
    return app.exit(e) == 0 ? polya::cli::kExitOk : polya::cli::kExitUsage;
  }
  if (config.command == Command::verify && !config.grid) config.grid = POLYA_DEFAULT_GRID;
  config.format = format == "json" ? Format::json : Format::csv;
  return polya::cli::run_guarded(config, std::cout, std::cerr);
}
