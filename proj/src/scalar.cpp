#include "tscalc/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <cstdio>
#include <string>

namespace tscalc {

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::Exact ? "exact" : "float";
}

Mode parse_mode(std::string_view name) {
  if (name == "exact") return Mode::Exact;
  if (name == "float") return Mode::Float;
  throw Error(Errc::ConfigError, "unknown numeric mode '" + std::string(name) + "'");
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::zero(Mode mode) { return from_int(0, mode); }
Scalar Scalar::one(Mode mode) { return from_int(1, mode); }

Scalar Scalar::from_int(long value, Mode mode) {
  return mode == Mode::Exact ? Scalar(mpq_class(value)) : Scalar(static_cast<double>(value));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Parses [+-]digits[.digits][(e|E)[+-]digits] exactly.
mpq_class parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw Error(Errc::ConfigError, "malformed number '" + std::string(whole) + "'");
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    throw Error(Errc::ConfigError, "malformed number '" + std::string(whole) + "'");

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class num(digits.empty() ? "0" : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  mpq_class q(num);
  if (exponent > 0) q *= mpq_class(pow10(static_cast<unsigned long>(exponent)));
  if (exponent < 0) q /= mpq_class(pow10(static_cast<unsigned long>(-exponent)));
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

mpq_class Scalar::parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::ConfigError, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpq_class num = parse_decimal(text.substr(0, slash), text);
    mpq_class den = parse_decimal(text.substr(slash + 1), text);
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    mpq_class q = num / den;
    q.canonicalize();
    return q;
  }
  return parse_decimal(text, text);
}

Scalar Scalar::parse(std::string_view text, Mode mode) {
  return Scalar(parse_rational(text)).to_mode(mode);
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw Error(Errc::ModeMismatch, "rational() on a float scalar");
  return std::get<mpq_class>(value_);
}

namespace {

// mpq get_d truncates; pick the nearest of the truncation and its outward neighbour.
double nearest_double(const mpq_class& q) {
  double d = q.get_d();
  if (!std::isfinite(d) || q == 0) return d;
  double away = std::nextafter(d, q > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return d;
  mpq_class err_d = abs(q - mpq_class(d));
  mpq_class err_away = abs(q - mpq_class(away));
  if (err_away < err_d) return away;
  if (err_d < err_away) return d;
  std::int64_t bits = 0;
  std::memcpy(&bits, &d, sizeof bits);
  return (bits & 1) == 0 ? d : away;
}

}  // namespace

double Scalar::to_double() const {
  if (is_exact()) return nearest_double(std::get<mpq_class>(value_));
  return std::get<double>(value_);
}

Scalar Scalar::to_mode(Mode target) const {
  if (target == mode()) return *this;
  if (target == Mode::Float) return Scalar(nearest_double(std::get<mpq_class>(value_)));
  double d = std::get<double>(value_);
  if (!std::isfinite(d)) throw Error(Errc::DomainError, "non-finite value has no exact form");
  return Scalar(mpq_class(d));
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_));
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

bool Scalar::is_integer() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_den() == 1;
  double d = std::get<double>(value_);
  return std::isfinite(d) && std::trunc(d) == d;
}

void Scalar::require_same_mode(const Scalar& rhs) const {
  if (mode() != rhs.mode())
    throw Error(Errc::ModeMismatch, "cannot combine exact and float scalars");
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (is_exact())
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  else
    std::get<double>(value_) += std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (is_exact())
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  else
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (is_exact())
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  else
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  if (is_exact())
    std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
  else
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_mode(rhs);
  if (lhs.is_exact()) return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
  return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_mode(rhs);
  if (lhs.is_exact()) {
    int c = cmp(std::get<mpq_class>(lhs.value_), std::get<mpq_class>(rhs.value_));
    return c <=> 0;
  }
  double l = std::get<double>(lhs.value_);
  double r = std::get<double>(rhs.value_);
  if (std::isnan(l) || std::isnan(r)) throw Error(Errc::DomainError, "comparison with NaN");
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar Scalar::pow_int(long exponent) const {
  if (!is_exact()) return Scalar(std::pow(std::get<double>(value_), static_cast<double>(exponent)));
  const mpq_class& base = std::get<mpq_class>(value_);
  if (exponent < 0 && base == 0) throw Error(Errc::DivisionByZero, "zero raised to a negative power");
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class r = exponent < 0 ? mpq_class(den, num) : mpq_class(num, den);
  r.canonicalize();
  return Scalar(std::move(r));
}

Scalar Scalar::pow(const Scalar& exponent) const {
  require_same_mode(exponent);
  if (is_exact()) {
    if (!exponent.is_integer())
      throw Error(Errc::ModeRequired, "non-integer power needs float mode");
    const mpq_class& e = exponent.rational();
    if (!e.get_num().fits_slong_p()) throw Error(Errc::DomainError, "exponent too large");
    return pow_int(e.get_num().get_si());
  }
  double b = std::get<double>(value_);
  double e = std::get<double>(exponent.value_);
  if (b == 0.0 && e < 0.0) throw Error(Errc::DivisionByZero, "zero raised to a negative power");
  double r = std::pow(b, e);
  if (std::isnan(r)) throw Error(Errc::DomainError, "negative base with non-integer exponent");
  return Scalar(r);
}

Scalar Scalar::root(unsigned long n) const {
  if (n == 0) throw Error(Errc::DomainError, "zeroth root");
  if (sign() < 0 && n % 2 == 0) throw Error(Errc::NegativeSqrt, "even root of a negative value");
  if (n == 1) return *this;
  if (!is_exact()) {
    double d = std::get<double>(value_);
    if (n == 2) return Scalar(std::sqrt(d));
    double r = std::pow(std::fabs(d), 1.0 / static_cast<double>(n));
    return Scalar(d < 0 ? -r : r);
  }
  const mpq_class& q = std::get<mpq_class>(value_);
  mpz_class num, den;
  bool exact_num = mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), n) != 0;
  bool exact_den = mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), n) != 0;
  if (!exact_num || !exact_den)
    throw Error(Errc::ModeRequired, q.get_str() + " is not a perfect power; use float mode");
  return Scalar(mpq_class(num, den));
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  char buf[64];
  double d = std::get<double>(value_);
  auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

bool Scalar::same_as(const Scalar& other) const noexcept {
  if (mode() != other.mode()) return false;
  if (is_exact()) return std::get<mpq_class>(value_) == std::get<mpq_class>(other.value_);
  return std::get<double>(value_) == std::get<double>(other.value_);
}

}  // namespace tscalc
