#include "harmsum/elliptic.hpp"

#include <algorithm>

#include "harmsum/errors.hpp"

namespace harmsum {

namespace {

struct AgmResult {
  Real k_value;
  Real e_value;
};

// K and E from the AGM started at (1, √(1 - k²)), with the square of k
// given so the exact tokens do not go through a rounded k.
AgmResult agm(const Real& k_squared, mpfr_prec_t bits, bool want_e) {
  Real a(1, bits);
  Real b = sqrt(Real(1, bits) - k_squared);
  // E/K = 1 - Σ 2^(n-1) c_n², c_0 = k
  Real correction = k_squared / 2L;
  Real power(1, bits);
  // the callers run 16 bits above their working precision
  const Real eps = ldexp(Real(1, bits), -static_cast<long>(bits) + 16);
  for (int n = 0; n < 10000; ++n) {
    if (abs(a - b) <= eps * a) break;
    Real c = (a - b) / 2L;
    Real next_a = (a + b) / 2L;
    b = sqrt(a * b);
    a = next_a;
    if (want_e) {
      correction += power * c * c;
      power *= 2L;
    }
  }
  Real k_value = pi(bits) / (a * 2L);
  Real e_value(0, bits);
  if (want_e) e_value = k_value * (Real(1, bits) - correction);
  return {k_value, e_value};
}

Real squared_modulus(const Modulus& m, mpfr_prec_t bits) {
  if (m.kind() == Modulus::Kind::one_over_sqrt2) return Real(Rational(1, 2), bits);
  if (m.exact()) return Real(*m.exact() * *m.exact(), bits);
  const Real k = m.value().rounded(std::max(bits, m.value().precision()));
  return k * k;
}

}  // namespace

Modulus Modulus::of(const Real& k) {
  if (k.sign() < 0 || k >= 1L) throw DomainError("elliptic modulus must lie in [0, 1)");
  Modulus m(Kind::numeric);
  m.k_ = k;
  return m;
}

Modulus Modulus::of(const Rational& k) {
  if (k.sign() < 0 || k >= Rational(1)) throw DomainError("elliptic modulus must lie in [0, 1)");
  Modulus m(Kind::numeric);
  m.k_ = Real(k, 64);
  m.exact_ = k;
  return m;
}

Real ell_k(const Modulus& m, const PrecisionContext& ctx) {
  if (m.kind() == Modulus::Kind::imaginary_unit) throw DomainError("K at the imaginary unit is not supported");
  const mpfr_prec_t bits = ctx.bits() + 16;
  return agm(squared_modulus(m, bits), bits, false).k_value.rounded(ctx.bits());
}

Real ell_e(const Modulus& m, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 16;
  if (m.kind() == Modulus::Kind::imaginary_unit) {
    // E(ik) = √(1+k²) E(k/√(1+k²)) at k = 1
    Real e = agm(Real(Rational(1, 2), bits), bits, true).e_value;
    return (sqrt(Real(2, bits)) * e).rounded(ctx.bits());
  }
  return agm(squared_modulus(m, bits), bits, true).e_value.rounded(ctx.bits());
}

Real gf_binomsq(const Rational& y, const PrecisionContext& ctx) {
  if (y.sign() <= 0 || y >= Rational(1, 16)) throw DomainError("generating function needs 0 < y < 1/16");
  // the two terms are each about 1/(8y) and cancel
  const long loss = std::max<long>(0, static_cast<long>(mpz_sizeinbase(y.denominator().get_mpz_t(), 2)) -
                                          static_cast<long>(mpz_sizeinbase(y.numerator().get_mpz_t(), 2)));
  const mpfr_prec_t bits = ctx.bits() + 16 + loss;
  // (4√y)² = 16y
  AgmResult r = agm(Real(y * Rational(16), bits), bits, true);
  const Real p = pi(bits);
  Real first = r.e_value / (p * Real(y * Rational(4), bits));
  Real second = Real((Rational(1) - Rational(1) / (Rational(16) * y)) * Rational(4), bits) * r.k_value / p;
  return (first + second).rounded(ctx.bits());
}

EllipticOdeResidual ode_residuals(const Real& k, const Real& h, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const Real kk = k.rounded(bits);
  auto e_at = [&](const Real& x) { return ell_e(Modulus::of(x), ctx); };
  auto k_at = [&](const Real& x) { return ell_k(Modulus::of(x), ctx); };
  auto five_point = [&](const auto& f) {
    const Real h2 = h * 2L;
    return (f(kk - h2) - f(kk + h2) + (f(kk + h) - f(kk - h)) * 8L) / (h * 12L);
  };
  const Real e = e_at(kk);
  const Real kv = k_at(kk);
  const Real one_minus = Real(1, bits) - kk * kk;
  EllipticOdeResidual out;
  out.e_residual = five_point(e_at) - (e - kv) / kk;
  out.k_residual = five_point(k_at) - (e - one_minus * kv) / (kk * one_minus);
  return out;
}

}  // namespace harmsum
