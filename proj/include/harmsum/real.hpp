#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "harmsum/rational.hpp"

namespace harmsum {

/// Arbitrary-precision binary floating-point value (MPFR, round-to-nearest).
///
/// Every value carries its own precision; binary operations produce a result
/// at the larger of the two operand precisions. NaN and infinities are never
/// values: operations that would create them throw DomainError.
class Real {
 public:
  explicit Real(mpfr_prec_t precision = 64);
  Real(long value, mpfr_prec_t precision);
  Real(const Rational& value, mpfr_prec_t precision);
  Real(const Integer& value, mpfr_prec_t precision);
  /// Exact copy of a double (for tests and diagnostics).
  static Real from_double(double value, mpfr_prec_t precision);
  /// Decimal literal such as "0.40908" or "-1.5e-3".
  static Real parse(std::string_view text, mpfr_prec_t precision);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  /// Copy of this value correctly rounded to `precision` bits.
  Real rounded(mpfr_prec_t precision) const;

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent() const noexcept { return mpfr_get_exp(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `significant_digits` digits, e.g. "4.0907e-1".
  std::string to_string(int significant_digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(const Rational& o);
  Real& operator-=(const Rational& o);
  Real& operator*=(const Rational& o);
  Real& operator/=(const Rational& o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real operator-() const;

  friend std::ostream& operator<<(std::ostream& os, const Real& x);

 private:
  void ensure_finite(const char* what) const;
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(Real a, const Rational& b);
Real operator-(Real a, const Rational& b);
Real operator*(Real a, const Rational& b);
Real operator/(Real a, const Rational& b);
Real operator+(const Rational& a, Real b);
Real operator-(const Rational& a, const Real& b);
Real operator*(const Rational& a, Real b);
Real operator/(const Rational& a, const Real& b);
Real operator*(Real a, long b);
Real operator*(long a, Real b);
Real operator/(Real a, long b);

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, long b);
bool operator==(const Real& a, long b);

Real abs(Real x);
Real sqrt(const Real& x);
Real log(const Real& x);
/// log(1 + x), accurate for small x.
Real log1p(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
/// sin(pi x) and cos(pi x) with exact argument reduction.
Real sin_pi(const Real& x);
Real cos_pi(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real asinh(const Real& x);
Real atan(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real pow(const Real& base, const Rational& exponent);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

}  // namespace harmsum
