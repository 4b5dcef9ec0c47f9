#include <CLI11.hpp>

#include <iostream>

#include "tscalc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Two-variable Gronwall-Bellman-Bihari bounds on time scales"};
  app.require_subcommand(1);

  std::string mode, out, format;
  app.add_option("--mode", mode, "numeric mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--out", out, "output path (default stdout)");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));

  std::string config_path;
  auto* bound = app.add_subcommand("bound", "compute and certify a bound from a scenario config");
  bound->add_option("config", config_path, "scenario JSON")->required();

  std::string theorem = "thm1";
  std::size_t cases = 100;
  std::uint64_t seed = tscalc::cli::kDefaultSeed;
  std::size_t max_window = 12;
  auto* verify = app.add_subcommand("verify", "random oracle campaign");
  verify->add_option("--theorem", theorem, "thm1, thm1-in2, thm1-in6, best-linear, thm2, thm3, thm4, cor31");
  verify->add_option("--cases", cases, "number of random scenarios");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--max-window", max_window, "largest window size per axis");

  std::string ibvp_path;
  auto* ibvp = app.add_subcommand("ibvp", "solve the IBVP and check the a-priori estimate");
  ibvp->add_option("config", ibvp_path, "IBVP JSON")->required();

  auto* example = app.add_subcommand("example31", "reproduce the six-value worked example");

  CLI11_PARSE(app, argc, argv);

  tscalc::cli::GlobalOptions opts;
  if (!mode.empty()) opts.mode = tscalc::parse_mode(mode);
  if (!out.empty()) opts.out = out;
  if (!format.empty()) opts.format = format;

  if (bound->parsed()) return tscalc::cli::cmd_bound(config_path, opts, std::cout, std::cerr);
  if (verify->parsed())
    return tscalc::cli::cmd_verify(theorem, cases, seed, max_window, opts, std::cout, std::cerr);
  if (ibvp->parsed()) return tscalc::cli::cmd_ibvp(ibvp_path, opts, std::cout, std::cerr);
  if (example->parsed()) return tscalc::cli::cmd_example31(std::cout);
  return 1;
}
