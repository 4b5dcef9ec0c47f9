#include "tscalc/report_io.hpp"

namespace tscalc::io {

json grid_values(const GridFunction2& F) {
  json rows = json::array();
  for (std::size_t i = 0; i < F.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < F.cols(); ++j) row.push_back(F(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json grid_axes(const TimeScale& ts1, const TimeScale& ts2) {
  json p1 = json::array(), p2 = json::array();
  for (std::size_t i = 0; i < ts1.size(); ++i) p1.push_back(ts1.exact_point(i).get_str());
  for (std::size_t j = 0; j < ts2.size(); ++j) p2.push_back(ts2.exact_point(j).get_str());
  return {{"scale1", kind_name(ts1.kind())},
          {"scale2", kind_name(ts2.kind())},
          {"points1", std::move(p1)},
          {"points2", std::move(p2)},
          {"approximate", !ts1.is_discrete() || !ts2.is_discrete()}};
}

namespace {

json points(const std::vector<GridPoint>& pts) {
  json out = json::array();
  for (const auto& [i, j] : pts) out.push_back({i, j});
  return out;
}

}  // namespace

json oracle_json(const OracleResult& r) {
  return {{"dominated", r.dominated},
          {"worst_margin", r.worst_margin.str()},
          {"worst_relative_margin", r.worst_relative_margin},
          {"attained_points", points(r.attained_points)},
          {"violations", points(r.violations)},
          {"u_star", grid_values(r.u_star)}};
}

json report_json(const BoundReport& report) {
  json hyp = json::object();
  for (const auto& h : report.hypotheses) hyp[h.name] = h.holds;
  json sharp = nullptr;
  if (report.sharpness) {
    sharp = json::array();
    for (std::size_t i = 0; i < report.sharpness->rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < report.sharpness->cols(); ++j)
        row.push_back(sharper_name((*report.sharpness)(i, j)));
      sharp.push_back(std::move(row));
    }
  }
  json grid = grid_axes(report.bounds.ts1(), report.bounds.ts2());
  grid["approximate"] = report.approximate;
  return {{"theorem", theorem_name(report.theorem)},
          {"mode", mode_name(report.mode)},
          {"certified", report.certified()},
          {"grid", std::move(grid)},
          {"bounds", grid_values(report.bounds)},
          {"oracle", report.oracle ? oracle_json(*report.oracle) : json(nullptr)},
          {"sharpness", std::move(sharp)},
          {"hypotheses", std::move(hyp)}};
}

void write_csv(std::ostream& out, const GridFunction2& F) {
  out << "t1/t2";
  for (std::size_t j = 0; j < F.cols(); ++j) out << ',' << F.ts2().exact_point(j).get_str();
  out << '\n';
  for (std::size_t i = 0; i < F.rows(); ++i) {
    out << F.ts1().exact_point(i).get_str();
    for (std::size_t j = 0; j < F.cols(); ++j) out << ',' << F(i, j).str();
    out << '\n';
  }
}

json campaign_json(const CampaignSummary& s) {
  return {{"theorem", s.theorem},           {"seed", s.seed},
          {"cases", s.cases},               {"checks", s.checks},
          {"failures", s.failures},         {"worst_margin", s.worst_margin},
          {"attained_count", s.attained_count}, {"failed_cases", s.failed_cases}};
}

json ibvp_json(const IbvpSolution& solution, const GridFunction2& estimate,
               const OracleResult& check) {
  json margin = json::array();
  for (std::size_t i = 0; i < estimate.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < estimate.cols(); ++j) {
      if (i == 0 && j == 0)
        row.push_back(nullptr);
      else
        row.push_back(relative_margin(estimate(i, j), solution.u(i, j)));
    }
    margin.push_back(std::move(row));
  }
  return {{"grid", grid_axes(estimate.ts1(), estimate.ts2())},
          {"solution", grid_values(solution.u)},
          {"estimate", grid_values(estimate)},
          {"margin", std::move(margin)},
          {"dominated", check.dominated},
          {"worst_relative_margin", check.worst_relative_margin},
          {"violations", points(check.violations)}};
}

}  // namespace tscalc::io
