#include "tscalc/cli.hpp"

#include <fstream>
#include <sstream>

#include "tscalc/config.hpp"
#include "tscalc/oracle.hpp"
#include "tscalc/report_io.hpp"
#include "tscalc/worked_example.hpp"

namespace tscalc::cli {

namespace {

std::string pick_format(const GlobalOptions& opts, const std::optional<std::string>& fallback) {
  std::string fmt = opts.format.value_or(fallback.value_or("json"));
  if (fmt != "json" && fmt != "csv") throw Error(Errc::ConfigError, "unknown format '" + fmt + "'");
  return fmt;
}

// Writes to the file when a path is given, else to `out`.
void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path);
  if (!file) throw Error(Errc::IoError, "cannot write '" + *path + "'");
  file << text;
  if (!file) throw Error(Errc::IoError, "write to '" + *path + "' failed");
}

}  // namespace

int cmd_bound(const std::string& config_path, const GlobalOptions& opts, std::ostream& out,
              std::ostream& err) {
  try {
    config::ScenarioFile file = config::scenario(config::read_file(config_path), opts.mode);
    const std::string fmt = pick_format(opts, file.format);
    const BoundReport report = certify(file.scenario);
    std::ostringstream text;
    if (fmt == "csv")
      io::write_csv(text, report.bounds);
    else
      text << io::report_json(report).dump(2) << '\n';
    emit(opts.out ? opts.out : file.out, text.str(), out);
    if (!report.certified()) {
      err << "bound not certified: hypotheses or oracle check failed\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_verify(const std::string& theorem, std::size_t cases, std::uint64_t seed,
               std::size_t max_window, const GlobalOptions& opts, std::ostream& out,
               std::ostream& err) {
  try {
    if (max_window < 2) throw Error(Errc::ConfigError, "--max-window must be at least 2");
    const CampaignSummary summary = run_campaign(theorem, cases, seed, max_window);
    emit(opts.out, io::campaign_json(summary).dump(2) + "\n", out);
    return summary.failures == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_ibvp(const std::string& config_path, const GlobalOptions& opts, std::ostream& out,
             std::ostream& err) {
  try {
    const config::json doc = config::read_file(config_path);
    const IbvpProblem prob = config::ibvp_problem(doc);
    std::optional<std::string> fmt_hint;
    if (doc.contains("format")) fmt_hint = doc["format"].get<std::string>();
    const std::string fmt = pick_format(opts, fmt_hint);
    std::optional<std::string> path = opts.out;
    if (!path && doc.contains("out")) path = doc["out"].get<std::string>();

    const IbvpSolution sol = solve_ibvp_recorded(prob);
    const GridFunction2 estimate = estimate_in7(prob);
    if (!sol.hypothesis_holds()) {
      err << "HypothesisViolated: F(t1,t2,u) > t2 u at " << sol.hypothesis_failures.size()
          << " visited states\n";
      return 2;
    }
    const GridPoint origin[] = {{0, 0}};
    const OracleResult check = check_domination(sol.u, estimate, origin);

    std::ostringstream text;
    if (fmt == "csv") {
      text << "# solution\n";
      io::write_csv(text, sol.u);
      text << "# estimate\n";
      io::write_csv(text, estimate);
    } else {
      text << io::ibvp_json(sol, estimate, check).dump(2) << '\n';
    }
    emit(path, text.str(), out);
    return check.dominated ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_example31(std::ostream& out) {
  const Example31Factors got = example31_factors();
  const Scalar want_in2_21 = Scalar::exact(3, 2);
  const Scalar want_in2_32 = Scalar::exact(147, 10);
  const Scalar want_in6_21 = Scalar::exact(29, 20);
  const Scalar want_in6_32 = Scalar::exact(637, 40);
  out << "(2,1): in2=" << got.in2_at_21.str() << " in6=" << got.in6_at_21.str() << '\n';
  out << "(3,2): in2=" << got.in2_at_32.str() << " in6=" << got.in6_at_32.str() << '\n';
  const bool ok = got.in2_at_21 == want_in2_21 && got.in2_at_32 == want_in2_32 &&
                  got.in6_at_21 == want_in6_21 && got.in6_at_32 == want_in6_32;
  out << (ok ? "match" : "MISMATCH") << '\n';
  return ok ? 0 : 1;
}

}  // namespace tscalc::cli
