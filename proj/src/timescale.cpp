#include "tscalc/timescale.hpp"

#include <algorithm>
#include <string>

namespace tscalc {

const char* kind_name(TimeScale::Kind kind) noexcept {
  switch (kind) {
    case TimeScale::Kind::Integers: return "integers";
    case TimeScale::Kind::QScale: return "qscale";
    case TimeScale::Kind::Sequence: return "sequence";
    case TimeScale::Kind::UniformSample: return "sample";
  }
  return "unknown";
}

TimeScale::TimeScale(Kind kind, std::vector<mpq_class> points, std::vector<mpq_class> increments)
    : kind_(kind), exact_points_(std::move(points)), increments_(std::move(increments)) {
  if (exact_points_.size() < 2)
    throw Error(Errc::InvalidScale, "a time-scale window needs at least two points");
  float_points_.reserve(exact_points_.size());
  exact_mu_.reserve(exact_points_.size() - 1);
  float_mu_.reserve(exact_points_.size() - 1);
  for (std::size_t i = 0; i < exact_points_.size(); ++i) {
    float_points_.push_back(Scalar(exact_points_[i]).to_double());
    if (i + 1 < exact_points_.size()) {
      mpq_class mu = exact_points_[i + 1] - exact_points_[i];
      if (mu <= 0) throw Error(Errc::InvalidScale, "window points must be strictly increasing");
      float_mu_.push_back(Scalar(mu).to_double());
      exact_mu_.push_back(std::move(mu));
    }
  }
}

TimeScale TimeScale::integers(const mpq_class& step, const mpq_class& left,
                              const mpq_class& right) {
  if (step <= 0) throw Error(Errc::InvalidScale, "integer scale step must be positive");
  mpq_class span = (right - left) / step;
  span.canonicalize();
  if (span.get_den() != 1 || span < 1)
    throw Error(Errc::InvalidScale, "window [a, b] must span a positive whole number of steps");
  if (!span.get_num().fits_ulong_p() || span.get_num() > 1'000'000)
    throw Error(Errc::InvalidScale, "integer window too large");
  std::size_t n = span.get_num().get_ui();
  std::vector<mpq_class> pts;
  pts.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) pts.emplace_back(left + step * mpq_class(k));
  return TimeScale(Kind::Integers, std::move(pts), {});
}

TimeScale TimeScale::qscale(const mpq_class& ratio, const mpq_class& start, std::size_t k_max) {
  if (ratio <= 1) throw Error(Errc::InvalidScale, "q-scale ratio must exceed 1");
  if (start <= 0) throw Error(Errc::InvalidScale, "q-scale start must be positive");
  std::vector<mpq_class> pts;
  pts.reserve(k_max + 1);
  mpq_class t = start;
  for (std::size_t k = 0; k <= k_max; ++k) {
    pts.push_back(t);
    t *= ratio;
  }
  return TimeScale(Kind::QScale, std::move(pts), {});
}

TimeScale TimeScale::sequence(const mpq_class& start, std::vector<mpq_class> increments) {
  std::vector<mpq_class> pts;
  pts.reserve(increments.size() + 1);
  pts.push_back(start);
  for (const auto& alpha : increments) {
    if (alpha <= 0) throw Error(Errc::InvalidScale, "sequence increments must be positive");
    pts.emplace_back(pts.back() + alpha);
  }
  return TimeScale(Kind::Sequence, std::move(pts), std::move(increments));
}

TimeScale TimeScale::uniform_sample(const mpq_class& left, const mpq_class& step,
                                    std::size_t count) {
  if (step <= 0) throw Error(Errc::InvalidScale, "sample step must be positive");
  std::vector<mpq_class> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.emplace_back(left + step * mpq_class(i));
  return TimeScale(Kind::UniformSample, std::move(pts), {});
}

Scalar TimeScale::point(std::size_t i, Mode mode) const {
  if (mode == Mode::Exact) return Scalar(exact_points_.at(i));
  return Scalar(float_points_.at(i));
}

Scalar TimeScale::graininess_at(std::size_t i, Mode mode) const {
  if (i >= exact_mu_.size())
    throw Error(Errc::MaximumPoint, "graininess is undefined at the window maximum");
  if (mode == Mode::Exact) return Scalar(exact_mu_[i]);
  return Scalar(float_mu_[i]);
}

const mpq_class& TimeScale::exact_graininess_at(std::size_t i) const {
  if (i >= exact_mu_.size())
    throw Error(Errc::MaximumPoint, "graininess is undefined at the window maximum");
  return exact_mu_[i];
}

std::optional<std::size_t> TimeScale::find(const Scalar& t) const {
  if (t.is_exact()) {
    auto it = std::lower_bound(exact_points_.begin(), exact_points_.end(), t.rational());
    if (it != exact_points_.end() && *it == t.rational())
      return static_cast<std::size_t>(it - exact_points_.begin());
    return std::nullopt;
  }
  double d = t.to_double();
  auto it = std::lower_bound(float_points_.begin(), float_points_.end(), d);
  if (it != float_points_.end() && *it == d)
    return static_cast<std::size_t>(it - float_points_.begin());
  return std::nullopt;
}

std::size_t TimeScale::index_of(const Scalar& t) const {
  if (auto i = find(t)) return *i;
  throw Error(Errc::PointNotInScale, t.str() + " is not a point of the window");
}

Scalar sigma(const TimeScale& ts, const Scalar& t) {
  std::size_t i = ts.index_of(t);
  return ts.point(i == ts.last() ? i : i + 1, t.mode());
}

Scalar graininess(const TimeScale& ts, const Scalar& t) {
  return ts.graininess_at(ts.index_of(t), t.mode());
}

namespace {

void check_mode(const Scalar& value, Mode mode) {
  if (value.mode() != mode)
    throw Error(Errc::ModeMismatch, "integrand returned a value of the wrong numeric mode");
}

void check_interval(std::size_t from, std::size_t to) {
  if (from > to) throw Error(Errc::DomainError, "interval endpoints out of order");
}

}  // namespace

Scalar delta_integral_1d(const TimeScale& ts, const IndexFunction& f, std::size_t from,
                         std::size_t to, Mode mode) {
  check_interval(from, to);
  if (to >= ts.size()) throw Error(Errc::PointNotInScale, "interval end outside the window");
  Scalar sum = Scalar::zero(mode);
  for (std::size_t k = from; k < to; ++k) {
    Scalar v = f(k);
    check_mode(v, mode);
    sum += ts.graininess_at(k, mode) * v;
  }
  return sum;
}

Scalar delta_integral_1d(const TimeScale& ts, const PointFunction& f, const Scalar& a,
                         const Scalar& b) {
  const Mode mode = a.mode();
  std::size_t from = ts.index_of(a);
  std::size_t to = ts.index_of(b);
  return delta_integral_1d(
      ts, [&](std::size_t k) { return f(ts.point(k, mode)); }, from, to, mode);
}

ExpValue exp_fn(const TimeScale& ts, const IndexFunction& p, std::size_t t, std::size_t s,
                Mode mode) {
  check_interval(s, t);
  if (t >= ts.size()) throw Error(Errc::PointNotInScale, "interval end outside the window");
  ExpValue out{Scalar::one(mode), false};
  for (std::size_t k = s; k < t; ++k) {
    Scalar pk = p(k);
    check_mode(pk, mode);
    Scalar factor = Scalar::one(mode) + ts.graininess_at(k, mode) * pk;
    if (factor.is_zero())
      throw Error(Errc::NotRegressive, "1 + mu p vanishes at window index " + std::to_string(k));
    if (factor.sign() < 0) out.negative_factor = true;
    out.value *= factor;
  }
  return out;
}

ExpValue exp_fn(const TimeScale& ts, const PointFunction& p, const Scalar& t, const Scalar& s) {
  const Mode mode = t.mode();
  std::size_t ti = ts.index_of(t);
  std::size_t si = ts.index_of(s);
  return exp_fn(
      ts, [&](std::size_t k) { return p(ts.point(k, mode)); }, ti, si, mode);
}

}  // namespace tscalc
