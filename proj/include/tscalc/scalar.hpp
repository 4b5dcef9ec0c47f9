#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "tscalc/error.hpp"

namespace tscalc {

enum class Mode { Exact, Float };

std::string_view mode_name(Mode mode) noexcept;
Mode parse_mode(std::string_view name);

/**
 * A number in one of two representations: a canonical GMP rational or an
 * IEEE double. Arithmetic never converts implicitly; combining operands of
 * different modes throws ModeMismatch.
 */
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  explicit Scalar(double d) : value_(d) {}

  static Scalar exact(long num, long den = 1);
  static Scalar zero(Mode mode);
  static Scalar one(Mode mode);
  static Scalar from_int(long value, Mode mode);

  /// Accepts "n", "n/d", decimals ("0.25") and exponent forms ("1e-3"),
  /// always read exactly and then converted to `mode`.
  static Scalar parse(std::string_view text, Mode mode);
  static mpq_class parse_rational(std::string_view text);

  Mode mode() const noexcept { return value_.index() == 0 ? Mode::Exact : Mode::Float; }
  bool is_exact() const noexcept { return mode() == Mode::Exact; }

  const mpq_class& rational() const;
  double to_double() const;
  Scalar to_mode(Mode mode) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  // Mixed-mode comparison throws; equality on doubles is bitwise-value equality.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  /// Exact: integer exponent required. Float: std::pow.
  Scalar pow(const Scalar& exponent) const;
  Scalar pow_int(long exponent) const;
  /// Exact: perfect n-th power required (else ModeRequired). Float: std::pow(x, 1/n).
  Scalar root(unsigned long n) const;
  Scalar sqrt() const { return root(2); }

  /// "num/den" (or "num" for integers) in exact mode, shortest round-trip decimal in float mode.
  std::string str() const;

  /// True when both are identical in mode and value (no throw on mode mismatch).
  bool same_as(const Scalar& other) const noexcept;

 private:
  void require_same_mode(const Scalar& rhs) const;

  std::variant<mpq_class, double> value_;
};

inline Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace tscalc
