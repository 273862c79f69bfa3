#include <doctest.h>

#include "harmsum/elliptic.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/hyper.hpp"
#include "harmsum/quad.hpp"

using namespace harmsum;

namespace {

Real gamma_quarter(mpfr_prec_t bits) {
  Real in(Rational(1, 4), bits);
  Real out(bits);
  mpfr_gamma(out.raw(), in.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

TEST_CASE("singular values") {
  auto ctx = PrecisionContext::for_digits(60);
  const mpfr_prec_t b = 320;
  const Real g = gamma_quarter(b);
  const Real p = pi(b);
  const Real k_closed = g * g / (Real(4, b) * sqrt(p));
  const Real e_closed = g * g / (Real(8, b) * sqrt(p)) + p * sqrt(p) / (g * g);
  const Real k = ell_k(Modulus::one_over_sqrt2(), ctx);
  const Real e = ell_e(Modulus::one_over_sqrt2(), ctx);
  CHECK(digits_agreed(k, k_closed, 70) >= 60);
  CHECK(digits_agreed(e, e_closed, 70) >= 60);
  CHECK(digits_agreed(k, Real::parse("1.85407467730137", 64), 70) >= 14);
  CHECK(digits_agreed(e, Real::parse("1.35064388104768", 64), 70) >= 14);
  // Legendre at 1/√2: 2EK - K² = π/2
  CHECK(digits_agreed(e * k * 2L - k * k, p / 2L, 70) >= 60);
  CHECK(digits_agreed(ell_k(Modulus::of(Rational(0)), ctx), p / 2L, 70) >= 60);
  CHECK(digits_agreed(ell_e(Modulus::of(Rational(0)), ctx), p / 2L, 70) >= 60);
  // numeric modulus close to the token
  Real half_root = sqrt(Real(Rational(1, 2), 400));
  CHECK(digits_agreed(ell_k(Modulus::of(half_root), ctx), k, 70) >= 60);
}

TEST_CASE("E at the imaginary unit") {
  auto ctx = PrecisionContext::for_digits(40);
  const Real e_i = ell_e(Modulus::imaginary_unit(), ctx);
  CHECK(digits_agreed(e_i, Real::parse("1.91009889", 64), 40) >= 8);
  CHECK(digits_agreed(e_i, proof_integral("e_imag", ctx), 60) >= 40);
  CHECK_THROWS_AS(ell_k(Modulus::imaginary_unit(), ctx), DomainError);
}

TEST_CASE("AGM against the hypergeometric series") {
  auto ctx = PrecisionContext::for_digits(40);
  for (const Rational& k : {Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(7, 10), Rational(9, 10)}) {
    const Rational m = k * k;
    Real p = pi(ctx.bits() + 32);
    Real via_k = p / 2L * pfq_eval({{Rational(1, 2), Rational(1, 2)}, {Rational(1)}, m}, ctx).value;
    Real via_e = p / 2L * pfq_eval({{Rational(-1, 2), Rational(1, 2)}, {Rational(1)}, m}, ctx).value;
    CHECK(digits_agreed(ell_k(Modulus::of(k), ctx), via_k, 60) >= 40);
    CHECK(digits_agreed(ell_e(Modulus::of(k), ctx), via_e, 60) >= 40);
  }
  CHECK_THROWS_AS(Modulus::of(Rational(1)), DomainError);
  CHECK_THROWS_AS(Modulus::of(Rational(-1, 3)), DomainError);
  CHECK_THROWS_AS(Modulus::of(Real(2, 64)), DomainError);
}

TEST_CASE("derivative identities") {
  auto ctx = PrecisionContext::for_digits(60);
  const Real h = Real::parse("1e-10", ctx.bits());
  const Real threshold = Real::parse("1e-20", 64);
  for (const Real& k : {Real::parse("0.3", ctx.bits()), Real::parse("0.5", ctx.bits()),
                        sqrt(Real(Rational(1, 2), ctx.bits())), Real::parse("0.9", ctx.bits())}) {
    auto r = ode_residuals(k, h, ctx);
    CHECK(abs(r.e_residual) < threshold);
    CHECK(abs(r.k_residual) < threshold);
  }
}

TEST_CASE("binomial-square generating function") {
  auto ctx = PrecisionContext::for_digits(50);
  for (const Rational& y : {Rational(1, 32), Rational(1, 64), Rational(1, 20), Rational(3, 1000)}) {
    // Σ binom(2n,n)² yⁿ/(n+1) = 4F3-free form: 2F1[1/2, 1/2; 2; 16y]
    Real direct = pfq_eval({{Rational(1, 2), Rational(1, 2)}, {Rational(2)}, y * Rational(16)}, ctx).value;
    CHECK(digits_agreed(gf_binomsq(y, ctx), direct, 60) >= 50);
  }
  {
    // the rate-1/2 sum term by term
    const mpfr_prec_t b = ctx.bits();
    Real term(1, b);
    Real sum(0, b);
    for (long n = 0; n < 400; ++n) {
      sum += term / Real(n + 1, b);
      term *= Rational(4 * (2 * n + 1) * (2 * n + 1), (n + 1) * (n + 1) * 32);
    }
    CHECK(digits_agreed(gf_binomsq(Rational(1, 32), ctx), sum, 60) >= 50);
  }
  CHECK(digits_agreed(gf_binomsq(Rational(1, 1000000), PrecisionContext::for_digits(20)), Real(1, 64), 20) >= 5);
  CHECK_THROWS_AS(gf_binomsq(Rational(1, 16), ctx), DomainError);
  CHECK_THROWS_AS(gf_binomsq(Rational(0), ctx), DomainError);
  CHECK_THROWS_AS(gf_binomsq(Rational(-1, 40), ctx), DomainError);
}
