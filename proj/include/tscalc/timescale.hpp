#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tscalc/scalar.hpp"

namespace tscalc {

/**
 * A finite window [a, b] of one of four concrete time scales.
 *
 *   Integers       a, a+h, ..., b                (graininess h)
 *   QScale         t0, t0 q, ..., t0 q^k_max     (graininess (q-1) t)
 *   Sequence       t0, t0+alpha_1, ...           (graininess alpha_k at t_{k-1})
 *   UniformSample  left + i step, i < count      (approximates an interval of R)
 *
 * Points are generated from exact rational parameters and cached in both
 * numeric modes. Graininess is defined at every point except the window
 * maximum; sigma(max) = max.
 */
class TimeScale {
 public:
  enum class Kind { Integers, QScale, Sequence, UniformSample };

  static TimeScale integers(const mpq_class& step, const mpq_class& left, const mpq_class& right);
  static TimeScale qscale(const mpq_class& ratio, const mpq_class& start, std::size_t k_max);
  static TimeScale sequence(const mpq_class& start, std::vector<mpq_class> increments);
  static TimeScale uniform_sample(const mpq_class& left, const mpq_class& step, std::size_t count);

  Kind kind() const noexcept { return kind_; }
  bool is_discrete() const noexcept { return kind_ != Kind::UniformSample; }
  std::size_t size() const noexcept { return exact_points_.size(); }
  std::size_t last() const noexcept { return size() - 1; }

  const mpq_class& exact_point(std::size_t i) const { return exact_points_.at(i); }
  Scalar point(std::size_t i, Mode mode) const;
  Scalar min(Mode mode) const { return point(0, mode); }
  Scalar max(Mode mode) const { return point(last(), mode); }

  /// mu(t_i) = t_{i+1} - t_i; throws MaximumPoint at the last index.
  Scalar graininess_at(std::size_t i, Mode mode) const;
  const mpq_class& exact_graininess_at(std::size_t i) const;

  /// Sequence kind: the generating increments alpha_1..alpha_n. Empty otherwise.
  std::span<const mpq_class> increments() const noexcept { return increments_; }

  std::optional<std::size_t> find(const Scalar& t) const;
  /// Throws PointNotInScale when t is not a window point.
  std::size_t index_of(const Scalar& t) const;

  bool operator==(const TimeScale& other) const { return exact_points_ == other.exact_points_; }

 private:
  TimeScale(Kind kind, std::vector<mpq_class> points, std::vector<mpq_class> increments);

  Kind kind_;
  std::vector<mpq_class> exact_points_;
  std::vector<double> float_points_;
  std::vector<mpq_class> exact_mu_;
  std::vector<double> float_mu_;
  std::vector<mpq_class> increments_;
};

const char* kind_name(TimeScale::Kind kind) noexcept;

using PointFunction = std::function<Scalar(const Scalar&)>;
using IndexFunction = std::function<Scalar(std::size_t)>;

/// Forward jump: the next window point, or t itself at the window maximum.
Scalar sigma(const TimeScale& ts, const Scalar& t);

/// sigma(t) - t, in the mode of t.
Scalar graininess(const TimeScale& ts, const Scalar& t);

/// Sum over tau in [a, b) of mu(tau) f(tau). On UniformSample this is the
/// left-endpoint Riemann sum.
Scalar delta_integral_1d(const TimeScale& ts, const PointFunction& f, const Scalar& a,
                         const Scalar& b);
Scalar delta_integral_1d(const TimeScale& ts, const IndexFunction& f, std::size_t from,
                         std::size_t to, Mode mode);

struct ExpValue {
  Scalar value;
  bool negative_factor = false;  // some 1 + mu p < 0: regressive but not positively so
};

/// e_p(t, s) = prod over tau in [s, t) of (1 + mu(tau) p(tau)), s <= t.
/// Throws NotRegressive when a factor vanishes.
ExpValue exp_fn(const TimeScale& ts, const PointFunction& p, const Scalar& t, const Scalar& s);
ExpValue exp_fn(const TimeScale& ts, const IndexFunction& p, std::size_t t, std::size_t s,
                Mode mode);

}  // namespace tscalc
