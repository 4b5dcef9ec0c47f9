#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "tscalc/ibvp.hpp"
#include "tscalc/scenario.hpp"

namespace tscalc::config {

using json = nlohmann::json;

/// {"kind":"integers","h":"1","a":"0","b":"4"}, {"kind":"qscale","q":"2","t0":"1","k_max":5},
/// {"kind":"sequence","t0":"0","alphas":["1/4","1/2"]}, {"kind":"sample","left":"0","step":"1/64","count":65}
TimeScale time_scale(const json& record);

/// A scalar written as a JSON string ("3/4", "0.25") or number.
mpq_class rational(const json& value);

/// An expression string over (t1, t2), or {"table": {"points1", "points2", "rows", "fill"}}.
/// Table cells not listed take `fill` (default 0).
GridFunction2 grid_function(const json& value, const TimeScale& ts1, const TimeScale& ts2,
                            Mode mode);

/// Kernel expression over (t, s, tau, xi) = (t1, t2, s1, s2).
Kernel4 kernel(const json& value, const TimeScale& ts1, const TimeScale& ts2, Mode mode);

/// Exact for discrete scales with integer-free powers; float otherwise.
Mode default_mode(Theorem theorem, const TimeScale& ts1, const TimeScale& ts2,
                  const std::optional<Exponents>& exponents);

struct ScenarioFile {
  BoundScenario scenario;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

/// Mode precedence: override, then the document's "mode", then default_mode.
ScenarioFile scenario(const json& doc, std::optional<Mode> mode_override = std::nullopt);

/// {"g":"t1","h":"t2^2","F":"t2*u","scale1":{...},"scale2":{...}}
IbvpProblem ibvp_problem(const json& doc);

json read_file(const std::string& path);

}  // namespace tscalc::config
