#pragma once

#include <string_view>

#include "harmsum/rational.hpp"
#include "harmsum/real.hpp"

namespace harmsum {

/// Working precision for one evaluation: the decimal digits a caller asked
/// for, and the binary precision (including guard bits) used to deliver them.
class PrecisionContext {
 public:
  /// Context for `decimal_digits` digits, 1 <= decimal_digits <= 10000.
  static PrecisionContext for_digits(int decimal_digits);
  /// Context whose working precision is at least `bits`, with the usual guard.
  static PrecisionContext for_bits(long bits);

  int digits() const noexcept { return digits_; }
  long guard_bits() const noexcept { return guard_bits_; }
  long working_bits() const noexcept { return working_bits_; }
  mpfr_prec_t bits() const noexcept { return static_cast<mpfr_prec_t>(working_bits_); }

  /// Same request evaluated with `extra_bits` more working precision; the
  /// digit target grows with the precision.
  PrecisionContext elevated(long extra_bits) const;

  Real real(long v) const { return Real(v, bits()); }
  Real real(const Rational& v) const { return Real(v, bits()); }
  /// 2^-working_bits, the relative resolution of this context.
  Real epsilon() const;
  /// 10^-digits.
  Real tolerance() const;

 private:
  PrecisionContext(int digits, long guard, long working)
      : digits_(digits), guard_bits_(guard), working_bits_(working) {}
  int digits_;
  long guard_bits_;
  long working_bits_;
};

enum class Constant { pi, ln2, euler_gamma };

Real fundamental_const(Constant c, const PrecisionContext& ctx);
/// Lookup by name ("pi", "ln2", "euler_gamma"); throws DomainError otherwise.
Real fundamental_const(std::string_view name, const PrecisionContext& ctx);

Real pi(mpfr_prec_t bits);
Real ln2(mpfr_prec_t bits);
Real euler_gamma(mpfr_prec_t bits);

/// Number of leading decimal digits on which a and b agree, relative to
/// max(1, |b|), clipped to [0, cap].
int digits_agreed(const Real& a, const Real& b, int cap);

enum class HarmonicKind { H, H_alt, O, O2, H2 };

/// H_n, alternating H'_n, odd O_n, O_n^(2), H_n^(2) as exact rationals.
Rational harmonic(HarmonicKind kind, long n);

std::string_view harmonic_name(HarmonicKind kind);

}  // namespace harmsum
