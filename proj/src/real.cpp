#include "harmsum/real.hpp"

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

#include "harmsum/errors.hpp"

namespace harmsum {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_si(v_, value, kRnd);
}

Real::Real(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, value.raw().get_mpq_t(), kRnd);
}

Real::Real(const Integer& value, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_z(v_, value.get_mpz_t(), kRnd);
}

Real Real::from_double(double value, mpfr_prec_t precision) {
  Real out(precision);
  mpfr_set_d(out.v_, value, kRnd);
  out.ensure_finite("from_double");
  return out;
}

Real Real::parse(std::string_view text, mpfr_prec_t precision) {
  Real out(precision);
  const std::string s(text);
  char* end = nullptr;
  if (mpfr_strtofr(out.v_, s.c_str(), &end, 10, kRnd) != 0 && end == s.c_str()) {
    throw DomainError("malformed real literal '" + s + "'");
  }
  if (end == s.c_str() || *end != '\0') throw DomainError("malformed real literal '" + s + "'");
  out.ensure_finite("parse");
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(mpfr_prec_t precision) const {
  Real out(precision);
  mpfr_set(out.v_, v_, kRnd);
  return out;
}

std::string Real::to_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void Real::ensure_finite(const char* what) const {
  if (!mpfr_number_p(v_)) throw DomainError(std::string("non-finite result in ") + what);
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
  mpfr_mul(v_, v_, o.v_, kRnd);
  ensure_finite("multiplication");
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.is_zero()) throw DomainError("real division by zero");
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd);
  mpfr_div(v_, v_, o.v_, kRnd);
  ensure_finite("division");
  return *this;
}

Real& Real::operator+=(const Rational& o) {
  mpfr_add_q(v_, v_, o.raw().get_mpq_t(), kRnd);
  return *this;
}

Real& Real::operator-=(const Rational& o) {
  mpfr_sub_q(v_, v_, o.raw().get_mpq_t(), kRnd);
  return *this;
}

Real& Real::operator*=(const Rational& o) {
  mpfr_mul_q(v_, v_, o.raw().get_mpq_t(), kRnd);
  return *this;
}

Real& Real::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("real division by zero");
  mpfr_div_q(v_, v_, o.raw().get_mpq_t(), kRnd);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}

Real& Real::operator/=(long o) {
  if (o == 0) throw DomainError("real division by zero");
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.v_, out.v_, kRnd);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  const auto digits = static_cast<int>(static_cast<double>(x.precision()) * 0.30103) + 1;
  return os << x.to_string(digits);
}

Real operator+(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), kRnd);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), kRnd);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), kRnd);
  if (!mpfr_number_p(out.raw())) throw DomainError("non-finite result in multiplication");
  return out;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DomainError("real division by zero");
  Real out(wider(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), kRnd);
  if (!mpfr_number_p(out.raw())) throw DomainError("non-finite result in division");
  return out;
}

Real operator+(Real a, const Rational& b) { return a += b; }
Real operator-(Real a, const Rational& b) { return a -= b; }
Real operator*(Real a, const Rational& b) { return a *= b; }
Real operator/(Real a, const Rational& b) { return a /= b; }
Real operator+(const Rational& a, Real b) { return b += a; }
Real operator-(const Rational& a, const Real& b) { return -(b - a); }
Real operator*(const Rational& a, Real b) { return b *= a; }
Real operator/(const Rational& a, const Real& b) { return Real(a, b.precision()) / b; }
Real operator*(Real a, long b) { return a *= b; }
Real operator*(long a, Real b) { return b *= a; }
Real operator/(Real a, long b) { return a /= b; }

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  const int c = mpfr_cmp(a.raw(), b.raw());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  const int c = mpfr_cmp_si(a.raw(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

Real abs(Real x) {
  mpfr_abs(x.raw(), x.raw(), kRnd);
  return x;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  Real out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), kRnd);
  return out;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a nonpositive number");
  Real out(x.precision());
  mpfr_log(out.raw(), x.raw(), kRnd);
  return out;
}

Real log1p(const Real& x) {
  if (x <= -1) throw DomainError("log1p argument at or below -1");
  Real out(x.precision());
  mpfr_log1p(out.raw(), x.raw(), kRnd);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.raw(), x.raw(), kRnd);
  if (!mpfr_number_p(out.raw())) throw DomainError("exponential overflow");
  return out;
}

Real expm1(const Real& x) {
  Real out(x.precision());
  mpfr_expm1(out.raw(), x.raw(), kRnd);
  if (!mpfr_number_p(out.raw())) throw DomainError("exponential overflow");
  return out;
}

Real sin(const Real& x) {
  Real out(x.precision());
  mpfr_sin(out.raw(), x.raw(), kRnd);
  return out;
}

Real cos(const Real& x) {
  Real out(x.precision());
  mpfr_cos(out.raw(), x.raw(), kRnd);
  return out;
}

namespace {

// Reduces x to r in [-1, 1] with x = r + 2k; exact in binary floating point.
Real reduce_mod2(const Real& x) {
  Real half = ldexp(x, -1);
  Real k(half.precision());
  mpfr_rint(k.raw(), half.raw(), MPFR_RNDN);
  Real r(x.precision());
  mpfr_mul_2si(k.raw(), k.raw(), 1, kRnd);
  mpfr_sub(r.raw(), x.raw(), k.raw(), kRnd);
  return r;
}

Real pi_times(const Real& r) {
  Real pi(r.precision());
  mpfr_const_pi(pi.raw(), kRnd);
  return pi * r;
}

}  // namespace

Real sin_pi(const Real& x) {
  Real r = reduce_mod2(x);
  if (r.is_zero() || abs(r) == 1) return Real(x.precision());
  return sin(pi_times(r));
}

Real cos_pi(const Real& x) {
  Real r = reduce_mod2(x);
  Real half = abs(r) - Rational(1, 2);
  if (half.is_zero()) return Real(x.precision());
  return cos(pi_times(r));
}

Real sinh(const Real& x) {
  Real out(x.precision());
  mpfr_sinh(out.raw(), x.raw(), kRnd);
  if (!mpfr_number_p(out.raw())) throw DomainError("sinh overflow");
  return out;
}

Real cosh(const Real& x) {
  Real out(x.precision());
  mpfr_cosh(out.raw(), x.raw(), kRnd);
  if (!mpfr_number_p(out.raw())) throw DomainError("cosh overflow");
  return out;
}

Real tanh(const Real& x) {
  Real out(x.precision());
  mpfr_tanh(out.raw(), x.raw(), kRnd);
  return out;
}

Real asinh(const Real& x) {
  Real out(x.precision());
  mpfr_asinh(out.raw(), x.raw(), kRnd);
  return out;
}

Real atan(const Real& x) {
  Real out(x.precision());
  mpfr_atan(out.raw(), x.raw(), kRnd);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  if (base.sign() < 0 && !mpfr_integer_p(exponent.raw())) {
    throw DomainError("negative base with a non-integer exponent");
  }
  if (base.is_zero() && exponent.sign() < 0) throw DomainError("zero to a negative power");
  Real out(wider(base, exponent));
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), kRnd);
  if (!mpfr_number_p(out.raw())) throw DomainError("non-finite power");
  return out;
}

Real pow(const Real& base, long exponent) {
  if (base.is_zero() && exponent < 0) throw DomainError("zero to a negative power");
  Real out(base.precision());
  mpfr_pow_si(out.raw(), base.raw(), exponent, kRnd);
  if (!mpfr_number_p(out.raw())) throw DomainError("non-finite power");
  return out;
}

Real pow(const Real& base, const Rational& exponent) {
  if (exponent.is_integer() && exponent.numerator().fits_slong_p()) {
    return pow(base, exponent.numerator().get_si());
  }
  if (base.sign() < 0) throw DomainError("negative base with a non-integer exponent");
  if (base.is_zero()) {
    if (exponent.sign() < 0) throw DomainError("zero to a negative power");
    return Real(base.precision());
  }
  // x^(p/q) = exp((p/q) log x); the root form keeps small exponents exact.
  if (exponent.denominator() == 2 && exponent.numerator().fits_slong_p()) {
    return pow(sqrt(base), exponent.numerator().get_si());
  }
  return exp(log(base) * exponent);
}

Real ldexp(const Real& x, long e) {
  Real out(x);
  mpfr_mul_2si(out.raw(), out.raw(), e, kRnd);
  return out;
}

Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }
Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

}  // namespace harmsum
