#include "harmsum/accel.hpp"

#include <cmath>

#include "harmsum/errors.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/special.hpp"

namespace harmsum {

long cvz_depth(int digits) { return static_cast<long>(std::ceil(1.31 * digits)) + 4; }

Real cvz_alternating(const std::function<Real(long)>& a, long depth, mpfr_prec_t bits) {
  if (depth < 1) throw DomainError("acceleration depth must be positive");
  const mpfr_prec_t work = bits + 3 * depth + 16;
  Real d = pow(Real(3, work) + sqrt(Real(8, work)), depth);
  d = (d + Real(1, work) / d) / 2;
  Real b(-1, work);
  Real c = -d;
  Real s(0, work);
  for (long k = 0; k < depth; ++k) {
    c = b - c;
    s += c * a(k).rounded(work);
    // b_{k+1} = b_k (k+n)(k-n) / ((k+1/2)(k+1))
    b *= Rational((k + depth) * (k - depth) * 2, (2 * k + 1) * (k + 1));
  }
  return (s / d).rounded(bits);
}

Real central_derivative(const std::function<Real(const Real&)>& f, const Real& x, int k, const Real& h) {
  // Σ_j (-1)^j C(k, j) f(x + (k/2 - j) h) / h^k
  Real sum(0, x.precision());
  Integer binom = 1;
  for (int j = 0; j <= k; ++j) {
    const Real shift = h * Rational(k - 2 * j, 2);
    Real term = f(x + shift) * Rational(binom);
    if (j % 2 == 1) sum -= term; else sum += term;
    binom = binom * (k - j) / (j + 1);
  }
  return sum / pow(h, static_cast<long>(k));
}

TailEstimate euler_maclaurin_tail(const std::function<Real(const Real&)>& a, long N, const PrecisionContext& ctx,
                                  int orders) {
  const mpfr_prec_t bits = ctx.bits();
  const Real n_real(N, bits);
  IntegrandSpec spec{"tail", [&a](const Real& x, const Real&, const Real&) { return a(x); }, Rational(N),
                     std::nullopt, Singularity::none, Singularity::exp_decay};
  Real value = tanh_sinh(spec, ctx).value + a(n_real) / 2;
  auto table = bernoulli_even(static_cast<std::size_t>(orders) + 1);
  Real last(0, bits);
  Integer factorial = 1;
  for (int j = 1; j <= orders; ++j) {
    const int k = 2 * j - 1;
    factorial *= (2 * j - 1) * (2 * j);
    // Step 2^-q with q = bits/(k+2); the difference loses about k q bits.
    const long q = std::max<long>(8, static_cast<long>(bits) / (k + 2));
    const mpfr_prec_t work = bits + static_cast<mpfr_prec_t>(k * q) + 32;
    const Real h = ldexp(Real(1, work), -q) * Real(N, work);
    Real deriv = central_derivative(a, Real(N, work), k, h).rounded(bits);
    Real corr = deriv * ((*table)[j] / Rational(factorial));
    value -= corr;
    last = abs(corr);
  }
  return {value, last};
}

}  // namespace harmsum
