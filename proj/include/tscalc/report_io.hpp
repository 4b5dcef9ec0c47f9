#pragma once

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>

#include "tscalc/ibvp.hpp"
#include "tscalc/oracle.hpp"

namespace tscalc::io {

using json = nlohmann::json;

/// Rows per t1 point; values as "num/den" (exact) or shortest decimal (float).
json grid_values(const GridFunction2& F);
json grid_axes(const TimeScale& ts1, const TimeScale& ts2);
json oracle_json(const OracleResult& r);

/// Top-level keys: theorem, mode, certified, grid, bounds, oracle, sharpness, hypotheses.
json report_json(const BoundReport& report);

/// Header row "t1/t2,<t2 points>", then one row per t1 point.
void write_csv(std::ostream& out, const GridFunction2& F);

json campaign_json(const CampaignSummary& summary);

/// solution, estimate and relative margin grids (margin null at the excluded origin).
json ibvp_json(const IbvpSolution& solution, const GridFunction2& estimate,
               const OracleResult& check);

}  // namespace tscalc::io
