#include "tscalc/grid2.hpp"

namespace tscalc {

GridFunction2::GridFunction2(TimeScale ts1, TimeScale ts2, Matrix<Scalar> values)
    : ts1_(std::move(ts1)), ts2_(std::move(ts2)), values_(std::move(values)), mode_(Mode::Exact) {
  if (values_.rows() != ts1_.size() || values_.cols() != ts2_.size())
    throw Error(Errc::GridMismatch, "value matrix does not match the window sizes");
  mode_ = values_(0, 0).mode();
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (values_(i, j).mode() != mode_)
        throw Error(Errc::ModeMismatch, "grid values mix exact and float entries");
}

GridFunction2 GridFunction2::from_fn(const TimeScale& ts1, const TimeScale& ts2, Mode mode,
                                     const PointFn& fn) {
  Matrix<Scalar> values(ts1.size(), ts2.size());
  for (std::size_t i = 0; i < ts1.size(); ++i) {
    Scalar t1 = ts1.point(i, mode);
    for (std::size_t j = 0; j < ts2.size(); ++j) values(i, j) = fn(t1, ts2.point(j, mode));
  }
  return GridFunction2(ts1, ts2, std::move(values));
}

GridFunction2 GridFunction2::constant(const TimeScale& ts1, const TimeScale& ts2,
                                      const Scalar& c) {
  return GridFunction2(ts1, ts2, Matrix<Scalar>(ts1.size(), ts2.size(), c));
}

const Scalar& GridFunction2::at(const Scalar& t1, const Scalar& t2) const {
  return values_(ts1_.index_of(t1), ts2_.index_of(t2));
}

GridFunction2 GridFunction2::to_mode(Mode mode) const {
  if (mode == mode_) return *this;
  Matrix<Scalar> values(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) values(i, j) = values_(i, j).to_mode(mode);
  return GridFunction2(ts1_, ts2_, std::move(values));
}

bool GridFunction2::same_grid(const GridFunction2& other) const {
  return ts1_ == other.ts1_ && ts2_ == other.ts2_;
}

bool GridFunction2::same_values(const GridFunction2& other) const {
  if (!same_grid(other)) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!values_(i, j).same_as(other.values_(i, j))) return false;
  return true;
}

MonotoneFlags check_monotone(const GridFunction2& F) {
  MonotoneFlags flags;
  for (std::size_t i = 0; i < F.rows(); ++i) {
    for (std::size_t j = 0; j < F.cols(); ++j) {
      const Scalar& v = F(i, j);
      if (v.sign() < 0) flags.nonnegative = false;
      if (v.sign() <= 0) flags.positive = false;
      if (i > 0 && v < F(i - 1, j)) flags.nondecreasing = false;
      if (j > 0 && v < F(i, j - 1)) flags.nondecreasing = false;
    }
  }
  return flags;
}

Scalar double_delta_integral(const GridFunction2& F, std::size_t i, std::size_t j) {
  if (i >= F.rows() || j >= F.cols())
    throw Error(Errc::PointNotInScale, "integration limit outside the grid");
  const Mode mode = F.mode();
  Scalar total = Scalar::zero(mode);
  for (std::size_t k = 0; k < i; ++k) {
    Scalar inner = Scalar::zero(mode);
    for (std::size_t l = 0; l < j; ++l) inner += F.ts2().graininess_at(l, mode) * F(k, l);
    total += F.ts1().graininess_at(k, mode) * inner;
  }
  return total;
}

Scalar double_delta_integral(const GridFunction2& F, const Scalar& t1, const Scalar& t2) {
  return double_delta_integral(F, F.ts1().index_of(t1), F.ts2().index_of(t2));
}

GridFunction2 prefix_integral(const GridFunction2& F) {
  const Mode mode = F.mode();
  Matrix<Scalar> out(F.rows(), F.cols(), Scalar::zero(mode));
  // out(i+1, j+1) = out(i, j+1) + out(i+1, j) - out(i, j) + mu1 mu2 F(i, j)
  for (std::size_t i = 0; i + 1 < F.rows(); ++i) {
    Scalar mu1 = F.ts1().graininess_at(i, mode);
    for (std::size_t j = 0; j + 1 < F.cols(); ++j) {
      Scalar cell = mu1 * F.ts2().graininess_at(j, mode) * F(i, j);
      out(i + 1, j + 1) = out(i, j + 1) + out(i + 1, j) - out(i, j) + cell;
    }
  }
  return GridFunction2(F.ts1(), F.ts2(), std::move(out));
}

Scalar partial_delta(const GridFunction2& F, Axis axis, std::size_t i, std::size_t j) {
  const Mode mode = F.mode();
  if (axis == Axis::First) {
    Scalar mu = F.ts1().graininess_at(i, mode);
    return (F(i + 1, j) - F(i, j)) / mu;
  }
  Scalar mu = F.ts2().graininess_at(j, mode);
  return (F(i, j + 1) - F(i, j)) / mu;
}

Scalar partial_delta(const GridFunction2& F, Axis axis, const Scalar& t1, const Scalar& t2) {
  return partial_delta(F, axis, F.ts1().index_of(t1), F.ts2().index_of(t2));
}

Scalar mixed_partial(const GridFunction2& F, std::size_t i, std::size_t j, bool reversed) {
  const Mode mode = F.mode();
  Scalar mu1 = F.ts1().graininess_at(i, mode);
  Scalar mu2 = F.ts2().graininess_at(j, mode);
  if (!reversed) {
    Scalar d1_here = partial_delta(F, Axis::First, i, j);
    Scalar d1_next = partial_delta(F, Axis::First, i, j + 1);
    return (d1_next - d1_here) / mu2;
  }
  Scalar d2_here = partial_delta(F, Axis::Second, i, j);
  Scalar d2_next = partial_delta(F, Axis::Second, i + 1, j);
  return (d2_next - d2_here) / mu1;
}

Scalar mixed_partial(const GridFunction2& F, const Scalar& t1, const Scalar& t2) {
  return mixed_partial(F, F.ts1().index_of(t1), F.ts2().index_of(t2));
}

}  // namespace tscalc
