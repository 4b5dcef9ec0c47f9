#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tscalc/grid2.hpp"

namespace tscalc {

enum class Theorem { Thm1In2, Thm1In6, BestLinear, Thm2, Thm3, Thm4, Cor31 };

std::string_view theorem_name(Theorem theorem) noexcept;
Theorem parse_theorem(std::string_view name);

/**
 * Four-argument kernel g(t1, t2, s1, s2) evaluated on window indices. The
 * kernel is never materialized; it may only be evaluated on the set
 * s1 <= t1, s2 <= t2 (KernelDomain otherwise).
 */
class Kernel4 {
 public:
  using IndexFn = std::function<Scalar(std::size_t i1, std::size_t i2, std::size_t k1,
                                       std::size_t k2)>;
  using PointFn = std::function<Scalar(const Scalar& t1, const Scalar& t2, const Scalar& s1,
                                       const Scalar& s2)>;

  explicit Kernel4(IndexFn fn) : fn_(std::move(fn)) {}

  static Kernel4 from_points(const TimeScale& ts1, const TimeScale& ts2, Mode mode, PointFn fn);
  /// g(t1, t2, s1, s2) = w(s1, s2).
  static Kernel4 from_weight(GridFunction2 w);

  Scalar operator()(std::size_t i1, std::size_t i2, std::size_t k1, std::size_t k2) const {
    if (k1 > i1 || k2 > i2)
      throw Error(Errc::KernelDomain, "kernel evaluated outside s1 <= t1, s2 <= t2");
    return fn_(i1, i2, k1, k2);
  }

 private:
  IndexFn fn_;
};

/// Exponents of the power-type premises u^p <= a + ... u^q. Requires p >= q > 0.
struct Exponents {
  mpq_class p{1};
  mpq_class q{1};

  void validate() const;
  /// q/p - 1
  mpq_class a_power() const;
};

/// Input of every bound: the grids of a and f (which carry the two windows),
/// the optional kernel and exponents, the selected theorem and numeric mode.
struct BoundScenario {
  GridFunction2 a;
  GridFunction2 f;
  std::optional<Kernel4> kernel_g;
  std::optional<Exponents> exponents;
  Theorem theorem = Theorem::Thm1In2;
  Mode mode = Mode::Exact;

  const TimeScale& ts1() const noexcept { return a.ts1(); }
  const TimeScale& ts2() const noexcept { return a.ts2(); }
  Exponents exps() const { return exponents.value_or(Exponents{}); }
  bool discrete() const noexcept { return ts1().is_discrete() && ts2().is_discrete(); }
};

struct Hypothesis {
  std::string name;
  bool holds = true;
};

enum class Sharper { In2, In6, Tie };
std::string_view sharper_name(Sharper s) noexcept;

using GridPoint = std::pair<std::size_t, std::size_t>;

struct OracleResult {
  GridFunction2 u_star;
  bool dominated = true;
  /// Minimum of bound - u (exact mode) or of (bound - u) / max(|bound|, |u|) (float mode).
  Scalar worst_margin;
  std::vector<GridPoint> attained_points;
  std::vector<GridPoint> violations;
  double worst_relative_margin = 0.0;
};

struct BoundReport {
  Theorem theorem = Theorem::Thm1In2;
  Mode mode = Mode::Exact;
  bool approximate = false;
  GridFunction2 bounds;
  std::vector<Hypothesis> hypotheses;
  std::optional<Matrix<Sharper>> sharpness;
  std::optional<OracleResult> oracle;

  bool hypotheses_hold() const;
  /// All hypotheses green and, when an oracle ran, the bound dominated it.
  bool certified() const;
};

}  // namespace tscalc
