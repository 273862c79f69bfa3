#include <doctest.h>

#include "harmsum/errors.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/special.hpp"

using namespace harmsum;

namespace {

Real g14sq(const PrecisionContext& ctx) {
  Real g = gamma(Rational(1, 4), ctx);
  return g * g;
}

}  // namespace

TEST_CASE("elementary integrals") {
  auto ctx = PrecisionContext::for_digits(40);
  Real v = integrate([](const Real&, const Real& l, const Real&) { return log(l); }, Rational(0), Rational(1), ctx);
  CHECK(digits_agreed(v, Real(-1, ctx.bits()), 50) >= 40);
  Real e = integrate([](const Real& x, const Real&, const Real&) { return exp(-x); }, Rational(0), std::nullopt, ctx);
  CHECK(digits_agreed(e, Real(1, ctx.bits()), 50) >= 40);
  Real shifted = integrate([](const Real& x, const Real&, const Real&) { return Real(1, x.precision()) / (x * x); },
                           Rational(3, 2), std::nullopt, ctx);
  CHECK(digits_agreed(shifted, Real(Rational(2, 3), ctx.bits()), 50) >= 40);
  Real poly = integrate([](const Real& x, const Real&, const Real&) { return x * x; }, Rational(-1), Rational(2), ctx);
  CHECK(digits_agreed(poly, Real(3, ctx.bits()), 50) >= 40);
}

TEST_CASE("non-integrable singularity is reported") {
  auto ctx = PrecisionContext::for_digits(20);
  IntegrandSpec spec{"inverse", [](const Real&, const Real& l, const Real&) { return Real(1, l.precision()) / l; },
                     Rational(0), Rational(1)};
  CHECK_THROWS_AS(tanh_sinh(spec, ctx), ConvergenceError);
  CHECK_THROWS_AS(proof_integral("nope", ctx), DomainError);
}

TEST_CASE("lemniscate integrals") {
  auto ctx = PrecisionContext::for_digits(50);
  const mpfr_prec_t b = ctx.bits();
  Real a = proof_integral("lemniscate_A", ctx);
  Real bb = proof_integral("lemniscate_B", ctx);
  CHECK(digits_agreed(a, Real::parse("1.311028777146059905232419794945559706841377475715811581408", 300), 60) >= 50);
  CHECK(digits_agreed(a, g14sq(ctx) / (4 * sqrt(2 * pi(b))), 60) >= 50);
  CHECK(digits_agreed(bb, sqrt(2 * pow(pi(b), 3L)) / g14sq(ctx), 60) >= 50);
  // A·B = π/4
  CHECK(digits_agreed(a * bb, pi(b) / 4, 60) >= 50);
}

TEST_CASE("log moments agree three ways") {
  auto ctx = PrecisionContext::for_digits(30);
  const mpfr_prec_t b = ctx.bits();
  CHECK(digits_agreed(log_moment(0, ctx), (4 * ln2(b) - Real(Rational(16, 3), b)) / 3, 40) >= 30);
  CHECK(digits_agreed(log_moment(1, ctx), (4 * ln2(b) - Real(Rational(16, 3) + Rational(4, 5), b)) / 5, 40) >= 30);
  for (long n = 0; n <= 10; ++n) {
    Real closed = log_moment(n, ctx);
    Real psi = log_moment_digamma(n, ctx);
    Real quad = log_moment_quadrature(n, ctx);
    CHECK(digits_agreed(closed, psi, 30) >= 30);
    CHECK(digits_agreed(closed, quad, 30) >= 30);
    CHECK(digits_agreed(psi, quad, 30) >= 30);
  }
  auto hi = PrecisionContext::for_digits(45);
  CHECK(digits_agreed(log_moment(3, hi), log_moment_quadrature(3, hi), 45) >= 40);
}

TEST_CASE("proof integrals and their closed forms") {
  auto ctx = PrecisionContext::for_digits(30);
  const mpfr_prec_t b = ctx.bits();
  const Real g2 = g14sq(ctx);
  const Real p = pi(b);
  const Real l2 = ln2(b);
  const Real sqrt2 = sqrt(Real(2, b));
  const Real p32 = p * sqrt(p);

  QuadResult detail;
  Real heavy = proof_integral("heavy", ctx, &detail);
  Real heavy_rhs = g2 * (4 - 2 * p + 2 * l2) / (64 * sqrt(2 * p)) - p32 * (p + l2) / (4 * sqrt2 * g2);
  CHECK(digits_agreed(heavy, heavy_rhs, 40) >= 30);
  CHECK(detail.last_level_delta < ctx.tolerance());
  CHECK(detail.levels_used >= 3);
  CHECK(digits_agreed(heavy, Real::parse("-0.3606503703302568444228559", b), 25) >= 25);

  Real split = proof_integral("split_total", ctx);
  Real split_rhs = sqrt2 * p32 / g2 + (sqrt(p / 2) / 16 - l2 / (16 * sqrt(2 * p))) * g2;
  CHECK(digits_agreed(split, split_rhs, 40) >= 30);
  CHECK(digits_agreed(split, Real::parse("1.40156573597157803588743", b), 23) >= 23);

  Real flat = proof_integral("part_flat", ctx);
  Real part_heavy = proof_integral("part_heavy", ctx);
  CHECK(digits_agreed(split, -flat - 2 * part_heavy, 40) >= 30);
  CHECK(digits_agreed(flat, proof_integral("after_change", ctx), 40) >= 30);
  CHECK(digits_agreed(heavy, proof_integral("heavy_u", ctx), 40) >= 30);
  CHECK(digits_agreed(proof_integral("after_change", ctx), Real::parse("-0.68026499531106434704171830697", b), 25) >= 25);
  CHECK(digits_agreed(proof_integral("catalan", ctx), Real(2, b), 40) >= 30);
}

TEST_CASE("parallel and serial quadrature agree bit for bit") {
  auto ctx = PrecisionContext::for_digits(40);
  for (const auto& name : catalog_integrand_names()) {
    IntegrandSpec spec = catalog_integrand(name, ctx);
    QuadResult par = tanh_sinh(spec, ctx);
    QuadResult ser = tanh_sinh_serial(spec, ctx);
    CHECK_MESSAGE(par.value == ser.value, name);
    CHECK(par.levels_used == ser.levels_used);
    CHECK(par.nodes == ser.nodes);
  }
}
