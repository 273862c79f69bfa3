#include "harmsum/numcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "harmsum/errors.hpp"

namespace harmsum {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

long guard_for(int digits) {
  return 32 + static_cast<long>(std::ceil(std::log2(static_cast<double>(digits) + 1.0)));
}

long bits_for(int digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * kLog2Of10 - 1e-12));
}

}  // namespace

PrecisionContext PrecisionContext::for_digits(int decimal_digits) {
  if (decimal_digits < 1 || decimal_digits > 10000) {
    throw DomainError("requested digits must lie in 1..10000, got " + std::to_string(decimal_digits));
  }
  const long guard = guard_for(decimal_digits);
  return PrecisionContext(decimal_digits, guard, bits_for(decimal_digits) + guard);
}

PrecisionContext PrecisionContext::for_bits(long bits) {
  int digits = 1;
  while (bits_for(digits + 1) + guard_for(digits + 1) <= bits) ++digits;
  PrecisionContext ctx = for_digits(digits);
  ctx.working_bits_ = std::max(ctx.working_bits_, bits);
  return ctx;
}

PrecisionContext PrecisionContext::elevated(long extra_bits) const {
  if (extra_bits < 0) throw DomainError("precision can only be raised");
  const int extra_digits = static_cast<int>(std::floor(static_cast<double>(extra_bits) / kLog2Of10));
  return PrecisionContext(digits_ + extra_digits, guard_bits_, working_bits_ + extra_bits);
}

Real PrecisionContext::epsilon() const { return ldexp(Real(1, bits()), -working_bits_); }

Real PrecisionContext::tolerance() const {
  Real out(bits());
  mpfr_ui_pow_ui(out.raw(), 10, static_cast<unsigned long>(digits_), MPFR_RNDN);
  mpfr_ui_div(out.raw(), 1, out.raw(), MPFR_RNDN);
  return out;
}

Real pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

Real ln2(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_log2(out.raw(), MPFR_RNDN);
  return out;
}

Real euler_gamma(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_euler(out.raw(), MPFR_RNDN);
  return out;
}

Real fundamental_const(Constant c, const PrecisionContext& ctx) {
  switch (c) {
    case Constant::pi:
      return pi(ctx.bits());
    case Constant::ln2:
      return ln2(ctx.bits());
    case Constant::euler_gamma:
      return euler_gamma(ctx.bits());
  }
  throw DomainError("unknown constant");
}

Real fundamental_const(std::string_view name, const PrecisionContext& ctx) {
  if (name == "pi") return fundamental_const(Constant::pi, ctx);
  if (name == "ln2") return fundamental_const(Constant::ln2, ctx);
  if (name == "euler_gamma") return fundamental_const(Constant::euler_gamma, ctx);
  throw DomainError("unknown constant '" + std::string(name) + "'");
}

int digits_agreed(const Real& a, const Real& b, int cap) {
  if (cap < 0) cap = 0;
  if (a == b) return cap;
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  Real diff = abs(a.rounded(p) - b.rounded(p));
  Real scale = max(Real(1, p), abs(b.rounded(p)));
  Real rel = diff / scale;
  Real lg(64);
  mpfr_log10(lg.raw(), rel.raw(), MPFR_RNDN);
  // A hair of slack so that pairs like 1.0000001 vs 1 read as 7 digits
  // despite the binary representation error of the inputs.
  const double d = -lg.to_double() + 1e-6;
  if (d <= 0) return 0;
  if (d >= static_cast<double>(cap)) return cap;
  return static_cast<int>(std::floor(d));
}

Rational harmonic(HarmonicKind kind, long n) {
  if (n < 0) throw DomainError("harmonic index must be nonnegative");
  mpq_class sum(0);
  for (long i = 1; i <= n; ++i) {
    switch (kind) {
      case HarmonicKind::H:
        sum += mpq_class(1, i);
        break;
      case HarmonicKind::H_alt:
        sum += (i % 2 == 1) ? mpq_class(1, i) : mpq_class(-1, i);
        break;
      case HarmonicKind::O:
        sum += mpq_class(1, 2 * i - 1);
        break;
      case HarmonicKind::O2: {
        mpz_class d = 2 * i - 1;
        sum += mpq_class(mpz_class(1), d * d);
        break;
      }
      case HarmonicKind::H2: {
        mpz_class d = i;
        sum += mpq_class(mpz_class(1), d * d);
        break;
      }
    }
    sum.canonicalize();
  }
  return Rational(sum);
}

std::string_view harmonic_name(HarmonicKind kind) {
  switch (kind) {
    case HarmonicKind::H:
      return "H";
    case HarmonicKind::H_alt:
      return "H_alt";
    case HarmonicKind::O:
      return "O";
    case HarmonicKind::O2:
      return "O2";
    case HarmonicKind::H2:
      return "H2";
  }
  return "?";
}

}  // namespace harmsum
