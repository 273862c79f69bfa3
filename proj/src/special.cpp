#include "harmsum/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "harmsum/errors.hpp"

namespace harmsum {

namespace {

// Tangent numbers by the Brent-Harvey in-place recurrence, then
// B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
std::vector<Rational> build_bernoulli(std::size_t count) {
  const std::size_t n = std::max<std::size_t>(count, 2);
  std::vector<Integer> t(n + 1);
  t[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) t[k] = static_cast<unsigned long>(k - 1) * t[k - 1];
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t j = k; j <= n; ++j) {
      t[j] = static_cast<unsigned long>(j - k) * t[j - 1] + static_cast<unsigned long>(j - k + 2) * t[j];
    }
  }
  std::vector<Rational> b;
  b.reserve(n);
  b.emplace_back(1);
  for (std::size_t k = 1; k < n; ++k) {
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    Integer num = Integer(static_cast<unsigned long>(2 * k)) * t[k];
    if (k % 2 == 0) num = -num;
    b.emplace_back(num, four_k * (four_k - 1));
  }
  return b;
}

std::mutex& bernoulli_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<const std::vector<Rational>>& bernoulli_slot() {
  static std::shared_ptr<const std::vector<Rational>> table;
  return table;
}

void require_not_pole(const Rational& x, const char* what) {
  if (x.is_nonpositive_integer()) {
    throw DomainError(std::string(what) + " has a pole at " + x.to_string());
  }
}

void require_not_pole(const Real& x, const char* what) {
  if (x.sign() <= 0 && mpfr_integer_p(x.raw())) {
    throw DomainError(std::string(what) + " has a pole at " + x.to_string(20));
  }
}

long stirling_threshold(mpfr_prec_t bits) { return static_cast<long>(0.2 * static_cast<double>(bits)) + 10; }

long extra_bits_for(const Real& x) {
  const long e = x.is_zero() ? 0 : std::max(0L, x.exponent());
  return 24 + 2 * static_cast<long>(std::log2(static_cast<double>(e) + 2.0)) + e / 8;
}

// log Γ(x) for x >= threshold by the Stirling series.
Real stirling_log_gamma(const Real& x, mpfr_prec_t bits) {
  Real half_log_2pi = log(ldexp(pi(bits), 1)) / 2;
  Real out = (x - Rational(1, 2)) * log(x) - x + half_log_2pi;
  const Real eps = ldexp(Real(1, bits), -static_cast<long>(bits) - 4);
  const Real inv_x2 = Real(1, bits) / (x * x);
  Real power = Real(1, bits) / x;
  std::size_t need = 64;
  auto table = bernoulli_even(need);
  for (std::size_t k = 1;; ++k) {
    if (k >= table->size()) {
      need *= 2;
      table = bernoulli_even(need);
    }
    Real term = power * (*table)[k];
    term /= static_cast<long>(2 * k * (2 * k - 1));
    out += term;
    if (abs(term) < eps) break;
    if (k > 4 * static_cast<std::size_t>(bits)) throw ConvergenceError("Stirling series did not converge");
    power *= inv_x2;
  }
  return out;
}

// ψ(x) for x >= threshold by the asymptotic series.
Real asymptotic_digamma(const Real& x, mpfr_prec_t bits) {
  Real out = log(x) - Real(1, bits) / (2 * x);
  const Real eps = ldexp(Real(1, bits), -static_cast<long>(bits) - 4);
  const Real inv_x2 = Real(1, bits) / (x * x);
  Real power = inv_x2;
  std::size_t need = 64;
  auto table = bernoulli_even(need);
  for (std::size_t k = 1;; ++k) {
    if (k >= table->size()) {
      need *= 2;
      table = bernoulli_even(need);
    }
    Real term = power * (*table)[k];
    term /= static_cast<long>(2 * k);
    out -= term;
    if (abs(term) < eps) break;
    if (k > 4 * static_cast<std::size_t>(bits)) throw ConvergenceError("digamma series did not converge");
    power *= inv_x2;
  }
  return out;
}

// log|Γ(x)| at `bits` precision, x not a pole.
Real log_gamma_impl(const Real& x_in, mpfr_prec_t bits, int* sign) {
  Real x = x_in.rounded(std::max(bits, x_in.precision()));
  if (x < Real(Rational(1, 2), bits)) {
    // Γ(x) Γ(1-x) = π / sin(πx)
    Real s = sin_pi(x);
    if (s.is_zero()) throw DomainError("gamma has a pole at " + x.to_string(20));
    int inner = 1;
    Real lg = log_gamma_impl(Real(1, bits) - x, bits, &inner);
    if (sign) *sign = s.sign() * inner;
    return log(pi(bits)) - log(abs(s)) - lg;
  }
  if (sign) *sign = 1;
  const long threshold = stirling_threshold(bits);
  if (x >= threshold) return stirling_log_gamma(x, bits);
  Real product(1, bits);
  Real shifted = x;
  while (shifted < threshold) {
    product *= shifted;
    shifted += Rational(1);
  }
  return stirling_log_gamma(shifted, bits) - log(product);
}

Real digamma_impl(const Real& x_in, mpfr_prec_t bits) {
  Real x = x_in.rounded(std::max(bits, x_in.precision()));
  if (x < Real(Rational(1, 2), bits)) {
    // ψ(x) = ψ(1-x) - π cot(πx)
    Real s = sin_pi(x);
    if (s.is_zero()) throw DomainError("digamma has a pole at " + x.to_string(20));
    return digamma_impl(Real(1, bits) - x, bits) - pi(bits) * cos_pi(x) / s;
  }
  const long threshold = stirling_threshold(bits);
  Real correction(0, bits);
  Real shifted = x;
  while (shifted < threshold) {
    correction += Real(1, bits) / shifted;
    shifted += Rational(1);
  }
  return asymptotic_digamma(shifted, bits) - correction;
}

// (n-1)! for small positive integers, and Γ(n + 1/2) = (2n)!/(4^n n!) √π.
bool gamma_special_value(const Rational& x, mpfr_prec_t bits, Real& out) {
  if (x.is_integer() && x.sign() > 0 && x.numerator() <= 2000) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), x.numerator().get_ui() - 1);
    out = Real(f, bits);
    return true;
  }
  if (x.denominator() == 2 && x.sign() > 0 && x.numerator() <= 4001) {
    const unsigned long n = (x.numerator().get_ui() - 1) / 2;
    Integer f2n;
    Integer fn;
    mpz_fac_ui(f2n.get_mpz_t(), 2 * n);
    mpz_fac_ui(fn.get_mpz_t(), n);
    Integer four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
    Real sq = sqrt(pi(bits + 8));
    out = (Real(Rational(f2n, four_n * fn), bits + 8) * sq).rounded(bits);
    return true;
  }
  return false;
}

}  // namespace

std::shared_ptr<const std::vector<Rational>> bernoulli_even(std::size_t count) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex());
  auto& slot = bernoulli_slot();
  if (!slot || slot->size() < count) {
    const std::size_t target = std::max<std::size_t>(count, slot ? 2 * slot->size() : 64);
    slot = std::make_shared<const std::vector<Rational>>(build_bernoulli(target));
  }
  return slot;
}

Real log_gamma(const Real& x, const PrecisionContext& ctx, int* sign) {
  require_not_pole(x, "gamma");
  const mpfr_prec_t work = ctx.bits() + extra_bits_for(x);
  return log_gamma_impl(x, work, sign).rounded(ctx.bits());
}

Real log_gamma(const Rational& x, const PrecisionContext& ctx, int* sign) {
  require_not_pole(x, "gamma");
  const mpfr_prec_t work = ctx.bits() + 24 + 2 * static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2));
  return log_gamma_impl(Real(x, work), work, sign).rounded(ctx.bits());
}

Real gamma(const Real& x, const PrecisionContext& ctx) {
  require_not_pole(x, "gamma");
  const mpfr_prec_t work = ctx.bits() + extra_bits_for(x);
  int s = 1;
  Real lg = log_gamma_impl(x, work, &s);
  Real out = exp(lg);
  if (s < 0) out = -out;
  return out.rounded(ctx.bits());
}

Real gamma(const Rational& x, const PrecisionContext& ctx) {
  require_not_pole(x, "gamma");
  Real special(ctx.bits());
  if (gamma_special_value(x, ctx.bits(), special)) return special;
  const mpfr_prec_t work = ctx.bits() + 24 + 2 * static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2));
  int s = 1;
  Real out = exp(log_gamma_impl(Real(x, work), work, &s));
  if (s < 0) out = -out;
  return out.rounded(ctx.bits());
}

Real digamma(const Real& x, const PrecisionContext& ctx) {
  require_not_pole(x, "digamma");
  const mpfr_prec_t work = ctx.bits() + extra_bits_for(x);
  return digamma_impl(x, work).rounded(ctx.bits());
}

Real digamma(const Rational& x, const PrecisionContext& ctx) {
  require_not_pole(x, "digamma");
  const mpfr_prec_t work = ctx.bits() + 24;
  if (x.is_integer() && x.numerator() <= 2000) {
    // ψ(n) = H_{n-1} - γ
    const long n = x.numerator().get_si();
    return (Real(harmonic(HarmonicKind::H, n - 1), work) - euler_gamma(work)).rounded(ctx.bits());
  }
  return digamma_impl(Real(x, work), work).rounded(ctx.bits());
}

Real beta(const Rational& x, const Rational& y, const PrecisionContext& ctx) {
  if (x.sign() <= 0 || y.sign() <= 0) throw DomainError("beta requires positive arguments");
  return gamma_quotient({{x, y}, {x + y}}, ctx);
}

Real gamma_quotient(const GammaQuotientSpec& spec, const PrecisionContext& ctx) {
  for (const auto& a : spec.numerator_args) require_not_pole(a, "gamma quotient numerator");
  for (const auto& a : spec.denominator_args) require_not_pole(a, "gamma quotient denominator");
  const auto inner = ctx.elevated(16);
  Real sum(0, inner.bits());
  int sign = 1;
  for (const auto& a : spec.numerator_args) {
    int s = 1;
    sum += log_gamma(a, inner, &s);
    sign *= s;
  }
  for (const auto& a : spec.denominator_args) {
    int s = 1;
    sum -= log_gamma(a, inner, &s);
    sign *= s;
  }
  Real out = exp(sum);
  if (sign < 0) out = -out;
  return out.rounded(ctx.bits());
}

Rational pochhammer_exact(const Rational& a, long n) {
  if (n < 0) throw DomainError("pochhammer index must be nonnegative");
  Rational out(1);
  Rational term = a;
  for (long i = 0; i < n; ++i) {
    out *= term;
    if (out.is_zero()) return out;
    term += Rational(1);
  }
  return out;
}

Real pochhammer(const Rational& a, long n, const PrecisionContext& ctx) {
  if (n <= 4000) return Real(pochhammer_exact(a, n), ctx.bits());
  return pochhammer(Real(a, ctx.bits() + 32), n).rounded(ctx.bits());
}

Real pochhammer(const Real& a, long n) {
  if (n < 0) throw DomainError("pochhammer index must be nonnegative");
  Real out(1, a.precision());
  Real term = a;
  for (long i = 0; i < n; ++i) {
    out *= term;
    term += Rational(1);
  }
  return out;
}

}  // namespace harmsum
