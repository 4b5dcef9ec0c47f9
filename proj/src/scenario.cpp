#include "tscalc/scenario.hpp"

#include <algorithm>
#include <string>

namespace tscalc {

std::string_view theorem_name(Theorem theorem) noexcept {
  switch (theorem) {
    case Theorem::Thm1In2: return "thm1-in2";
    case Theorem::Thm1In6: return "thm1-in6";
    case Theorem::BestLinear: return "best-linear";
    case Theorem::Thm2: return "thm2";
    case Theorem::Thm3: return "thm3";
    case Theorem::Thm4: return "thm4";
    case Theorem::Cor31: return "cor31";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::Thm1In2, Theorem::Thm1In6, Theorem::BestLinear, Theorem::Thm2,
                    Theorem::Thm3, Theorem::Thm4, Theorem::Cor31})
    if (theorem_name(t) == name) return t;
  throw Error(Errc::ConfigError, "unknown theorem '" + std::string(name) + "'");
}

std::string_view sharper_name(Sharper s) noexcept {
  switch (s) {
    case Sharper::In2: return "in2";
    case Sharper::In6: return "in6";
    case Sharper::Tie: return "tie";
  }
  return "unknown";
}

Kernel4 Kernel4::from_points(const TimeScale& ts1, const TimeScale& ts2, Mode mode, PointFn fn) {
  std::vector<Scalar> p1, p2;
  for (std::size_t i = 0; i < ts1.size(); ++i) p1.push_back(ts1.point(i, mode));
  for (std::size_t j = 0; j < ts2.size(); ++j) p2.push_back(ts2.point(j, mode));
  return Kernel4([p1 = std::move(p1), p2 = std::move(p2), fn = std::move(fn)](
                     std::size_t i1, std::size_t i2, std::size_t k1, std::size_t k2) {
    return fn(p1.at(i1), p2.at(i2), p1.at(k1), p2.at(k2));
  });
}

Kernel4 Kernel4::from_weight(GridFunction2 w) {
  return Kernel4([w = std::move(w)](std::size_t, std::size_t, std::size_t k1, std::size_t k2) {
    return w(k1, k2);
  });
}

void Exponents::validate() const {
  if (!(q > 0) || !(p >= q))
    throw Error(Errc::InvalidExponents,
                "exponents must satisfy p >= q > 0 (got p=" + p.get_str() + ", q=" + q.get_str() +
                    ")");
}

mpq_class Exponents::a_power() const {
  mpq_class r = q / p - 1;
  r.canonicalize();
  return r;
}

bool BoundReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.holds; });
}

bool BoundReport::certified() const {
  return hypotheses_hold() && (!oracle || oracle->dominated);
}

}  // namespace tscalc
