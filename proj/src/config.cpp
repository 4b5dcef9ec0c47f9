#include "tscalc/config.hpp"

#include <fstream>
#include <memory>

#include "tscalc/exprlang.hpp"

namespace tscalc::config {

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(Errc::ConfigError, std::string("missing key '") + key + "'");
  return obj.at(key);
}

std::size_t count(const json& value, const char* key) {
  if (value.is_number_unsigned()) return value.get<std::size_t>();
  if (value.is_number_integer() && value.get<long>() >= 0) return value.get<std::size_t>();
  if (value.is_string()) {
    mpq_class q = Scalar::parse_rational(value.get<std::string>());
    if (q.get_den() == 1 && q >= 0 && q.get_num().fits_ulong_p()) return q.get_num().get_ui();
  }
  throw Error(Errc::ConfigError, std::string("'") + key + "' must be a nonnegative integer");
}

}  // namespace

mpq_class rational(const json& value) {
  if (value.is_string()) return Scalar::parse_rational(value.get<std::string>());
  if (value.is_number()) return Scalar::parse_rational(value.dump());
  throw Error(Errc::ConfigError, "expected a number, got " + value.dump());
}

TimeScale time_scale(const json& record) {
  const std::string kind = field(record, "kind").get<std::string>();
  if (kind == "integers")
    return TimeScale::integers(record.contains("h") ? rational(record["h"]) : mpq_class(1),
                               rational(field(record, "a")), rational(field(record, "b")));
  if (kind == "qscale")
    return TimeScale::qscale(rational(field(record, "q")),
                             record.contains("t0") ? rational(record["t0"]) : mpq_class(1),
                             count(field(record, "k_max"), "k_max"));
  if (kind == "sequence") {
    std::vector<mpq_class> alphas;
    for (const auto& a : field(record, "alphas")) alphas.push_back(rational(a));
    return TimeScale::sequence(rational(field(record, "t0")), std::move(alphas));
  }
  if (kind == "sample")
    return TimeScale::uniform_sample(rational(field(record, "left")), rational(field(record, "step")),
                                     count(field(record, "count"), "count"));
  throw Error(Errc::ConfigError, "unknown scale kind '" + kind + "'");
}

GridFunction2 grid_function(const json& value, const TimeScale& ts1, const TimeScale& ts2,
                            Mode mode) {
  if (value.is_string() || value.is_number()) {
    std::string src = value.is_string() ? value.get<std::string>() : value.dump();
    auto e = std::make_shared<expr::Expr>(expr::parse(src, {"t1", "t2"}));
    return GridFunction2::from_fn(ts1, ts2, mode, [&](const Scalar& t1, const Scalar& t2) {
      const Scalar args[] = {t1, t2};
      return e->eval(args, mode);
    });
  }
  const json& table = field(value, "table");
  const Scalar fill = table.contains("fill") ? Scalar(rational(table["fill"])).to_mode(mode)
                                             : Scalar::zero(mode);
  auto indices = [&](const char* key, const TimeScale& ts) {
    std::vector<std::size_t> out;
    if (!table.contains(key)) {
      for (std::size_t i = 0; i < ts.size(); ++i) out.push_back(i);
      return out;
    }
    for (const auto& p : table[key]) out.push_back(ts.index_of(Scalar(rational(p))));
    return out;
  };
  const auto rows_at = indices("points1", ts1);
  const auto cols_at = indices("points2", ts2);
  const json& rows = field(table, "rows");
  if (rows.size() != rows_at.size())
    throw Error(Errc::ConfigError, "table has " + std::to_string(rows.size()) + " rows for " +
                                       std::to_string(rows_at.size()) + " points1");
  Matrix<Scalar> m(ts1.size(), ts2.size(), fill);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols_at.size())
      throw Error(Errc::ConfigError, "table row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols_at.size(); ++c)
      m(rows_at[r], cols_at[c]) = Scalar(rational(rows[r][c])).to_mode(mode);
  }
  return GridFunction2(ts1, ts2, std::move(m));
}

Kernel4 kernel(const json& value, const TimeScale& ts1, const TimeScale& ts2, Mode mode) {
  std::string src = value.is_string() ? value.get<std::string>() : value.dump();
  auto e = std::make_shared<const expr::Expr>(expr::parse(src, {"t", "s", "tau", "xi"}));
  return Kernel4::from_points(ts1, ts2, mode,
                              [e, mode](const Scalar& t, const Scalar& s, const Scalar& tau,
                                        const Scalar& xi) {
                                const Scalar args[] = {t, s, tau, xi};
                                return e->eval(args, mode);
                              });
}

Mode default_mode(Theorem theorem, const TimeScale& ts1, const TimeScale& ts2,
                  const std::optional<Exponents>& exponents) {
  if (!ts1.is_discrete() || !ts2.is_discrete()) return Mode::Float;
  if (theorem == Theorem::Thm3 || theorem == Theorem::Thm4 || theorem == Theorem::Cor31) {
    const Exponents e = exponents.value_or(Exponents{});
    if (e.p != 1 || e.q != 1) return Mode::Float;
  }
  return Mode::Exact;
}

ScenarioFile scenario(const json& doc, std::optional<Mode> mode_override) {
  const Theorem theorem = parse_theorem(field(doc, "theorem").get<std::string>());
  TimeScale ts1 = time_scale(field(doc, "scale1"));
  TimeScale ts2 = time_scale(field(doc, "scale2"));
  std::optional<Exponents> exps;
  if (doc.contains("p") || doc.contains("q")) {
    exps = Exponents{rational(field(doc, "p")), rational(field(doc, "q"))};
    exps->validate();
  }
  Mode mode = default_mode(theorem, ts1, ts2, exps);
  if (doc.contains("mode")) mode = parse_mode(doc["mode"].get<std::string>());
  if (mode_override) mode = *mode_override;

  GridFunction2 a = grid_function(field(doc, "a"), ts1, ts2, mode);
  GridFunction2 f = grid_function(field(doc, "f"), ts1, ts2, mode);
  std::optional<Kernel4> g;
  if (doc.contains("kernel_g")) g = kernel(doc["kernel_g"], ts1, ts2, mode);

  ScenarioFile out{BoundScenario{std::move(a), std::move(f), std::move(g), exps, theorem, mode},
                   std::nullopt, std::nullopt};
  if (doc.contains("out")) out.out = doc["out"].get<std::string>();
  if (doc.contains("format")) out.format = doc["format"].get<std::string>();
  return out;
}

IbvpProblem ibvp_problem(const json& doc) {
  auto text = [&](const char* key) {
    const json& v = field(doc, key);
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  auto g = std::make_shared<const expr::Expr>(expr::parse(text("g"), {"t1"}));
  auto h = std::make_shared<const expr::Expr>(expr::parse(text("h"), {"t2"}));
  auto F = std::make_shared<const expr::Expr>(expr::parse(text("F"), {"t1", "t2", "u"}));
  const Mode mode = Mode::Float;
  return IbvpProblem{
      time_scale(field(doc, "scale1")),
      time_scale(field(doc, "scale2")),
      [F, mode](const Scalar& t1, const Scalar& t2, const Scalar& u) {
        const Scalar args[] = {t1, t2, u};
        return F->eval(args, mode);
      },
      [g, mode](const Scalar& t) { return g->eval(std::span<const Scalar>(&t, 1), mode); },
      [h, mode](const Scalar& t) { return h->eval(std::span<const Scalar>(&t, 1), mode); }};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ConfigError, path + ": " + e.what());
  }
}

}  // namespace tscalc::config
