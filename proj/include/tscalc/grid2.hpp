#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tscalc/timescale.hpp"

namespace tscalc {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Values of a function on the product of two time-scale windows. Row index
/// runs over the first scale, column index over the second.
class GridFunction2 {
 public:
  using PointFn = std::function<Scalar(const Scalar& t1, const Scalar& t2)>;

  GridFunction2(TimeScale ts1, TimeScale ts2, Matrix<Scalar> values);

  static GridFunction2 from_fn(const TimeScale& ts1, const TimeScale& ts2, Mode mode,
                               const PointFn& fn);
  static GridFunction2 constant(const TimeScale& ts1, const TimeScale& ts2, const Scalar& c);

  const TimeScale& ts1() const noexcept { return ts1_; }
  const TimeScale& ts2() const noexcept { return ts2_; }
  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return values_.cols(); }
  Mode mode() const noexcept { return mode_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  const Scalar& at(const Scalar& t1, const Scalar& t2) const;
  const Matrix<Scalar>& values() const noexcept { return values_; }

  GridFunction2 to_mode(Mode mode) const;
  bool same_grid(const GridFunction2& other) const;
  /// Value-and-mode identity of every cell.
  bool same_values(const GridFunction2& other) const;

 private:
  TimeScale ts1_;
  TimeScale ts2_;
  Matrix<Scalar> values_;
  Mode mode_;
};

struct MonotoneFlags {
  bool nonnegative = true;
  bool nondecreasing = true;
  bool positive = true;  // strict; needed by the power-type bounds
};

MonotoneFlags check_monotone(const GridFunction2& F);

/// Sum over s1 in [a1, t1), s2 in [a2, t2) of mu1(s1) mu2(s2) F(s1, s2).
Scalar double_delta_integral(const GridFunction2& F, const Scalar& t1, const Scalar& t2);
Scalar double_delta_integral(const GridFunction2& F, std::size_t i, std::size_t j);

/// The table (t1, t2) -> double_delta_integral(F, t1, t2) over the full grid.
GridFunction2 prefix_integral(const GridFunction2& F);

enum class Axis { First = 1, Second = 2 };

/// Forward difference quotient along one axis; MaximumPoint at the window end.
Scalar partial_delta(const GridFunction2& F, Axis axis, const Scalar& t1, const Scalar& t2);
Scalar partial_delta(const GridFunction2& F, Axis axis, std::size_t i, std::size_t j);

/// d/Delta2 (dF/Delta1). `reversed` differentiates along the second axis first.
Scalar mixed_partial(const GridFunction2& F, const Scalar& t1, const Scalar& t2);
Scalar mixed_partial(const GridFunction2& F, std::size_t i, std::size_t j, bool reversed = false);

}  // namespace tscalc
