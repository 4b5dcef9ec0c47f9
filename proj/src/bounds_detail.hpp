#pragma once

// Shared preparation for the parallel bounds, their serial reference and the
// IBVP estimate. Not installed.

#include <exception>
#include <mutex>
#include <vector>

#include "tscalc/bounds.hpp"

namespace tscalc::detail {

enum class Family { Linear, Kernel, Power, PowerKernel };

Family family_of(Theorem theorem);

/// Mode, grid and exponent checks common to all bounds; throws on failure.
void validate(const BoundScenario& sc, Family family, bool origin_excluded = false);

std::vector<Scalar> graininess_vector(const TimeScale& ts, Mode mode);

/// Hypotheses for the family, scanned on the grid. The positive
/// regressivity entry is appended later, once the products are known.
std::vector<Hypothesis> scan_hypotheses(const BoundScenario& sc, Family family);

/// x^e for rational e. Exact mode needs x to be a perfect power of the
/// denominator (ModeRequired otherwise); 0^0 = 1.
Scalar rational_power(const Scalar& x, const mpq_class& e);

/// w(k,l) = f(k,l) a(k,l)^e, with w = 0 wherever f = 0 (the power is not
/// evaluated there).
Matrix<Scalar> power_weight(const GridFunction2& a, const GridFunction2& f, const mpq_class& e);

/// 1 + mu s, throwing NotRegressive when it vanishes.
Scalar regressive_factor(const Scalar& mu, const Scalar& s, bool& negative);

/// a^{1/p} E^{1/p} cellwise.
Matrix<Scalar> power_combine(const GridFunction2& a, const Matrix<Scalar>& E, const mpq_class& p);

/// Values of a^{1/p} [e_P(t1, a1)]^{1/p}, P(s1) = sum_{s2<t2} mu2 f(s1,s2) a^{q/p-1}(s1,s2).
/// With origin_excluded, a(0,0) = 0 is accepted (that cell's summand has f = 0).
Matrix<Scalar> power_bound_values(const BoundScenario& sc, bool origin_excluded, bool& negative);

BoundReport make_report(const BoundScenario& sc, Theorem theorem, Matrix<Scalar> values,
                        std::vector<Hypothesis> hypotheses, bool negative_factor);

// Runs fn(0..n-1) over OpenMP threads; the first exception thrown by any
// iteration is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::exception_ptr failure;
  std::mutex guard;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < count; ++idx) {
    try {
      fn(static_cast<std::size_t>(idx));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tscalc::detail
