#include <doctest.h>

#include "harmsum/accel.hpp"
#include "harmsum/special.hpp"

using namespace harmsum;

TEST_CASE("alternating acceleration") {
  CHECK(cvz_depth(30) == 44);
  CHECK(cvz_depth(10) == 18);
  const mpfr_prec_t bits = 200;
  auto ctx = PrecisionContext::for_digits(50);
  long depth = cvz_depth(50);
  Real log2 = cvz_alternating([](long k) { return Real(1, 260) / Real(k + 1, 260); }, depth, bits);
  CHECK(digits_agreed(log2, ln2(bits), 60) >= 50);
  Real leibniz = cvz_alternating([](long k) { return Real(1, 260) / Real(2 * k + 1, 260); }, depth, bits);
  CHECK(digits_agreed(leibniz, pi(bits) / 4L, 60) >= 50);
  // η(1/2)-type slow terms: Σ (-1)^k / sqrt(k+1) = (1 - √2) ζ(1/2)
  Real zeta_half(260);
  mpfr_zeta(zeta_half.raw(), Real(Rational(1, 2), 260).raw(), MPFR_RNDN);
  Real eta = cvz_alternating([](long k) { return Real(1, 260) / sqrt(Real(k + 1, 260)); }, depth, bits);
  CHECK(digits_agreed(eta, (Real(1, 260) - sqrt(Real(2, 260))) * zeta_half, 60) >= 45);
  (void)ctx;
}

TEST_CASE("Euler-Maclaurin tail") {
  auto ctx = PrecisionContext::for_digits(30);
  const mpfr_prec_t bits = ctx.bits();
  // Σ_{n>=N} 1/n² = π²/6 - Σ_{n<N} 1/n²
  for (long N : {200L, 1000L}) {
    auto tail = euler_maclaurin_tail([](const Real& x) { return Real(1, x.precision()) / (x * x); }, N, ctx);
    Real want = pi(bits) * pi(bits) / 6L;
    for (long n = 1; n < N; ++n) want -= Real(1, bits) / Real(n * n, bits);
    CHECK(digits_agreed(tail.value, want, 60) >= 22);
    CHECK(tail.last_correction.sign() >= 0);
    CHECK(tail.last_correction < Real(1, 64) / Real(N * N, 64));
  }
  // ln k / k³: the tail of Σ ln n / n³ = -ζ'(3)
  Real zeta3_prime = Real::parse("-0.1981262428856368533306818215032857968755", bits);
  const long N = 500;
  auto tail = euler_maclaurin_tail([](const Real& x) { return log(x) / (x * x * x); }, N, ctx);
  Real head(0, bits);
  for (long n = 2; n < N; ++n) {
    Real nr(n, bits);
    head += log(nr) / (nr * nr * nr);
  }
  CHECK(digits_agreed(head + tail.value, -zeta3_prime, 60) >= 25);
}

TEST_CASE("central differences") {
  const Real x(1, 300);
  const Real h = ldexp(Real(1, 300), -40);
  auto e = [](const Real& t) { return exp(t); };
  for (int k = 1; k <= 5; ++k) {
    CHECK(digits_agreed(central_derivative(e, x, k, h), exp(Real(1, 300)), 60) >= 20);
  }
}
