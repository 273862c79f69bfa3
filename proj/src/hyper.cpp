#include "harmsum/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "harmsum/accel.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/special.hpp"

namespace harmsum {

namespace {

std::optional<long> terminating_degree(const std::vector<Rational>& upper) {
  std::optional<long> m;
  for (const auto& a : upper) {
    if (a.is_nonpositive_integer()) {
      const long d = -a.numerator().get_si();
      if (!m || d < *m) m = d;
    }
  }
  return m;
}

Rational term_ratio(const std::vector<Rational>& upper, const std::vector<Rational>& lower, long n) {
  mpq_class num(1);
  mpq_class den(n + 1);
  const mpq_class nn(n);
  for (const auto& a : upper) num *= a.raw() + nn;
  for (const auto& b : lower) den *= b.raw() + nn;
  return Rational(mpq_class(num / den));
}

Rational sum_of(const std::vector<Rational>& v) {
  Rational s(0);
  for (const auto& x : v) s += x;
  return s;
}

// Removes upper/lower pairs that are equal.
HypSeriesSpec cancel_pairs(const HypSeriesSpec& spec) {
  HypSeriesSpec out{spec.upper, {}, spec.argument};
  for (const auto& b : spec.lower) {
    auto it = std::find(out.upper.begin(), out.upper.end(), b);
    if (it != out.upper.end()) {
      out.upper.erase(it);
    } else {
      out.lower.push_back(b);
    }
  }
  return out;
}

Real series_once(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Real& x,
                 mpfr_prec_t bits, long* terms, long* lost_bits) {
  const auto degree = terminating_degree(upper);
  const bool balanced = upper.size() == lower.size() + 1;
  if (!degree && upper.size() > lower.size() + 1 && !x.is_zero()) {
    throw DomainError("divergent hypergeometric series");
  }
  const Real ax = abs(x);
  if (!degree && balanced && ax >= 1) throw DomainError("series argument outside the unit disc");
  const Real eps = ldexp(Real(1, bits), -static_cast<long>(bits) - 2);
  Real term(1, bits);
  Real sum(1, bits);
  Real biggest(1, bits);
  long n = 0;
  for (;; ++n) {
    if (degree && n >= *degree) break;
    const Rational r = term_ratio(upper, lower, n);
    term *= r;
    term *= x;
    sum += term;
    if (abs(term) > biggest) biggest = abs(term);
    if (term.is_zero()) break;
    if (!degree) {
      const Rational next = term_ratio(upper, lower, n + 1);
      Real rho = abs(Real(next, bits) * x);
      if (balanced && rho < ax) rho = ax;
      if (rho < 1) {
        Real tail = abs(term) * rho / (Real(1, bits) - rho);
        if (tail <= eps * max(abs(sum), Real(1, bits) * eps)) break;
      }
    }
    if (n > 20000000) throw ConvergenceError("hypergeometric series needs too many terms");
  }
  if (terms) *terms = n + 1;
  if (lost_bits) {
    *lost_bits = sum.is_zero() ? static_cast<long>(bits) : std::max(0L, biggest.exponent() - sum.exponent());
  }
  return sum;
}

}  // namespace

std::string_view method_name(SumMethod m) {
  switch (m) {
    case SumMethod::direct:
      return "direct";
    case SumMethod::alternating_acceleration:
      return "alternating_acceleration";
    case SumMethod::euler_integral_quadrature:
      return "euler_integral_quadrature";
    case SumMethod::integral_quadrature:
      return "integral_quadrature";
    case SumMethod::euler_maclaurin:
      return "euler_maclaurin";
    case SumMethod::closed_form:
      return "closed_form";
  }
  return "?";
}

Real pfq_series_real(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Real& x,
                     mpfr_prec_t bits, long* terms) {
  for (const auto& b : lower) {
    if (b.is_nonpositive_integer()) throw DomainError("lower parameter is a nonpositive integer");
  }
  mpfr_prec_t work = bits + 32;
  long lost = 0;
  Real s = series_once(upper, lower, x.rounded(std::max(work, x.precision())), work, terms, &lost);
  if (lost > 24) {
    work = bits + 32 + lost;
    s = series_once(upper, lower, x.rounded(std::max(work, x.precision())), work, terms, &lost);
  }
  return s.rounded(bits);
}

Hyp2F1::Hyp2F1(const Rational& a, const Rational& b, const Rational& c, mpfr_prec_t bits)
    : a_(a), b_(b), c_(c), bits_(bits), near_coeff_(bits), far_coeff_(bits) {
  if (c.is_nonpositive_integer()) throw DomainError("lower parameter is a nonpositive integer");
  terminating_ = a.is_nonpositive_integer() || b.is_nonpositive_integer();
  const Rational gap = c - a - b;
  integer_gap_ = gap.is_integer();
  if (terminating_ || integer_gap_) return;
  const auto ctx = PrecisionContext::for_bits(bits + 16);
  // 2F1(z) = A 2F1(a, b; 1 - gap; w) + B w^gap 2F1(c - a, c - b; 1 + gap; w)
  auto coefficient = [&ctx](std::vector<Rational> num, std::vector<Rational> den) {
    for (const auto& d : den) {
      if (d.is_nonpositive_integer()) return Real(0, ctx.bits());
    }
    return gamma_quotient({std::move(num), std::move(den)}, ctx);
  };
  near_coeff_ = coefficient({c, gap}, {c - a, c - b});
  far_coeff_ = coefficient({c, -gap}, {a, b});
}

Real Hyp2F1::operator()(const Real& z, const Real& w) const {
  const mpfr_prec_t work = bits_ + 16;
  if (terminating_ || z <= Real(Rational(1, 2), work)) {
    return pfq_series_real({a_, b_}, {c_}, z, bits_);
  }
  if (integer_gap_) {
    if (z < Real(Rational(9, 10), work)) return pfq_series_real({a_, b_}, {c_}, z, bits_);
    throw DomainError("2F1 near 1 with an integer c - a - b is not supported");
  }
  const Rational gap = c_ - a_ - b_;
  Real out(0, work);
  if (!near_coeff_.is_zero()) out += near_coeff_ * pfq_series_real({a_, b_}, {Rational(1) - gap}, w, work);
  if (!far_coeff_.is_zero()) {
    out += far_coeff_ * pow(w.rounded(work), gap) * pfq_series_real({c_ - a_, c_ - b_}, {Rational(1) + gap}, w, work);
  }
  return out.rounded(bits_);
}

namespace {

struct EulerOrdering {
  Rational c;  // upper parameter moved into the kernel
  Rational e;  // lower parameter moved into the kernel
  std::vector<Rational> rest_upper;
  std::vector<Rational> rest_lower;
};

std::optional<EulerOrdering> find_ordering(const HypSeriesSpec& spec) {
  const std::size_t p = spec.upper.size();
  const std::size_t q = spec.lower.size();
  if (!((p == 2 && q == 1) || (p == 3 && q == 2))) return std::nullopt;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const Rational& c = spec.upper[i];
      const Rational& e = spec.lower[j];
      if (!(c.sign() > 0 && e > c)) continue;
      EulerOrdering o{c, e, {}, {}};
      for (std::size_t k = 0; k < p; ++k) {
        if (k != i) o.rest_upper.push_back(spec.upper[k]);
      }
      for (std::size_t k = 0; k < q; ++k) {
        if (k != j) o.rest_lower.push_back(spec.lower[k]);
      }
      if (p == 3) {
        const Rational& a = o.rest_upper[0];
        const Rational& b = o.rest_upper[1];
        const Rational& d = o.rest_lower[0];
        const bool term = a.is_nonpositive_integer() || b.is_nonpositive_integer();
        if (!term && (d - a - b).is_integer()) continue;
      }
      return o;
    }
  }
  return std::nullopt;
}

SummationOutcome euler_quadrature(const HypSeriesSpec& spec, const PrecisionContext& ctx) {
  const auto ordering = find_ordering(spec);
  if (!ordering) throw DomainError("no Euler-integral parameter ordering for this series");
  const Rational& x = spec.argument;
  if (!(x.sign() > 0 && x <= Rational(1)) && spec.upper.size() == 3) {
    throw DomainError("Euler-integral path for 3F2 needs 0 < x <= 1");
  }
  if (x > Rational(1) || x < Rational(-1)) throw DomainError("argument outside [-1, 1]");
  const EulerOrdering o = *ordering;
  const mpfr_prec_t bits = ctx.bits() + 16;
  const Rational one(1);
  const Rational kappa = o.e - o.c;
  // inner(t, 1 - t) and the power of (1 - t) it may carry at t = 1
  std::function<Real(const Real&, const Real&)> inner;
  Rational margin = kappa;
  if (spec.upper.size() == 2) {
    const Rational a = o.rest_upper[0];
    if (x == one) {
      inner = [a](const Real&, const Real& r) { return pow(r, -a); };
      margin = kappa - a;
    } else {
      inner = [a, x, bits](const Real& t, const Real&) { return pow(Real(1, bits) - t * x, -a); };
    }
  } else {
    auto f2 = std::make_shared<Hyp2F1>(o.rest_upper[0], o.rest_upper[1], o.rest_lower[0], bits);
    inner = [f2, x, bits](const Real& t, const Real& r) {
      if (x == Rational(1)) return (*f2)(t, r);
      return (*f2)(t * x, Real(1, bits) - Real(x, bits) + r * x);
    };
    const Rational gap = o.rest_lower[0] - o.rest_upper[0] - o.rest_upper[1];
    const bool terminating = o.rest_upper[0].is_nonpositive_integer() || o.rest_upper[1].is_nonpositive_integer();
    if (x == one && !terminating && gap.sign() < 0) margin = kappa + gap;
  }
  // t = u^(1/alpha), 1 - u = (1 - y)^(1/beta) flattens both endpoint powers
  const Rational alpha = std::min(o.c, one);
  const Rational beta = std::min({kappa, margin, one});
  const Rational u_power = o.c / alpha - one;
  const Rational ratio_power = kappa - one;
  const Rational q_power = kappa - beta;
  const Rational jacobian = one / (alpha * beta);
  Integrand f = [=](const Real& y, const Real& ly, const Real& ry) {
    const Real half(Rational(1, 2), bits);
    Real q = pow(ry, one / beta);
    Real u = y < half ? -expm1(log1p(-ly) / beta) : Real(1, bits) - q;
    Real t = alpha == one ? u : pow(u, one / alpha);
    Real r = alpha == one ? q : (t < half ? Real(1, bits) - t : -expm1(log1p(-q) / alpha));
    Real v = inner(t, r) * jacobian;
    if (!u_power.is_zero()) v *= pow(u, u_power);
    if (!ratio_power.is_zero() && alpha != one) v *= pow(r / q, ratio_power);
    if (!q_power.is_zero()) v *= pow(q, q_power);
    return v;
  };
  IntegrandSpec ispec{"euler_integral", f, Rational(0), Rational(1), Singularity::none, Singularity::none};
  QuadResult q = tanh_sinh(ispec, ctx);
  Real prefactor = gamma_quotient({{o.e}, {o.c, o.e - o.c}}, ctx.elevated(16));
  SummationOutcome out;
  out.value = (prefactor * q.value).rounded(ctx.bits());
  out.terms_used = q.nodes;
  out.tail_bound_estimate = q.last_level_delta * abs(prefactor);
  out.method = SumMethod::euler_integral_quadrature;
  out.digit_cap = kQuadratureCap;
  return out;
}

// Unit argument: N terms, then an Euler-Maclaurin tail on the term
// continued to real n through log-gamma.
SummationOutcome unit_direct(const HypSeriesSpec& spec, const PrecisionContext& ctx) {
  const long N = 1000;
  const mpfr_prec_t bits = ctx.bits() + 16;
  Real term(1, bits);
  Real sum(1, bits);
  for (long n = 0; n + 1 < N; ++n) {
    term *= term_ratio(spec.upper, spec.lower, n);
    sum += term;
  }
  // sum holds t_0 .. t_{N-1}
  const auto pctx = ctx.elevated(16);
  int sign = 1;
  Real log_c(0, bits);
  for (const auto& b : spec.lower) {
    int s = 1;
    log_c += log_gamma(b, pctx, &s);
    sign *= s;
  }
  for (const auto& a : spec.upper) {
    int s = 1;
    log_c -= log_gamma(a, pctx, &s);
    sign *= s;
  }
  const auto upper = spec.upper;
  const auto lower = spec.lower;
  auto continued = [upper, lower, log_c, sign](const Real& x) {
    // the log-gammas grow like x log x and their differences cancel
    const mpfr_prec_t work = x.precision() + std::max<long>(0, x.exponent()) + 16;
    const auto c = PrecisionContext::for_bits(work);
    const Real xw = x.rounded(work);
    Real lg = log_c.rounded(work) - log_gamma(xw + Rational(1), c);
    for (const auto& a : upper) lg += log_gamma(xw + a, c);
    for (const auto& b : lower) lg -= log_gamma(xw + b, c);
    Real v = exp(lg).rounded(x.precision());
    return sign < 0 ? -v : v;
  };
  TailEstimate tail = euler_maclaurin_tail(continued, N, pctx);
  SummationOutcome out;
  out.value = (sum + tail.value).rounded(ctx.bits());
  out.terms_used = N;
  out.tail_bound_estimate = tail.last_correction.rounded(ctx.bits());
  out.method = SumMethod::direct;
  out.digit_cap = kUnitArgumentDirectCap;
  return out;
}

SummationOutcome alternating(const HypSeriesSpec& spec, const PrecisionContext& ctx) {
  // Head: terms before every Pochhammer factor turns positive and the
  // magnitudes start to decrease are summed directly.
  long head = 0;
  for (const auto* group : {&spec.upper, &spec.lower}) {
    for (const auto& p : *group) {
      if (p.sign() < 0) head = std::max<long>(head, static_cast<long>(-floor(p).get_si()) + 1);
    }
  }
  while (abs(term_ratio(spec.upper, spec.lower, head)) >= Rational(1)) ++head;
  const mpfr_prec_t bits = ctx.bits() + 32;
  Real term(1, bits);
  Real head_sum(0, bits);
  for (long n = 0; n < head; ++n) {
    head_sum += term;
    term *= term_ratio(spec.upper, spec.lower, n);
    term *= spec.argument;
  }
  // tail terms t_head, t_head+1, ... alternate in sign from here on
  const Real first = abs(term);
  const int sign = term.sign();
  Real scale = max(abs(head_sum), first);
  long extra = 0;
  if (!head_sum.is_zero() && scale > abs(head_sum)) {
    extra = static_cast<long>(std::ceil((scale.exponent() - head_sum.exponent() + 1) * 0.30103));
  }
  const long depth = cvz_depth(ctx.digits() + static_cast<int>(extra) + 2);
  std::vector<Real> a;
  a.reserve(depth);
  Real mag = first;
  for (long n = 0; n < depth; ++n) {
    a.push_back(mag);
    mag *= abs(term_ratio(spec.upper, spec.lower, head + n));
  }
  Real tail = cvz_alternating([&a](long k) { return a[static_cast<std::size_t>(k)]; }, depth, bits);
  SummationOutcome out;
  out.value = (sign < 0 ? head_sum - tail : head_sum + tail).rounded(ctx.bits());
  out.terms_used = head + depth;
  // Chebyshev weights: error about 5.83^-depth times the first tail term.
  out.tail_bound_estimate = (first * pow(Real(3, bits) + sqrt(Real(8, bits)), -depth)).rounded(ctx.bits());
  out.method = SumMethod::alternating_acceleration;
  out.digit_cap = kAlternatingCap;
  return out;
}

}  // namespace

SummationOutcome pfq_eval(const HypSeriesSpec& raw, const PrecisionContext& ctx, PfqMethod method) {
  for (const auto& b : raw.lower) {
    if (b.is_nonpositive_integer()) throw DomainError("lower parameter " + b.to_string() + " is a nonpositive integer");
  }
  const HypSeriesSpec spec = cancel_pairs(raw);
  const Rational& x = spec.argument;
  const auto degree = terminating_degree(spec.upper);
  const bool balanced = spec.upper.size() == spec.lower.size() + 1;
  const Rational s = sum_of(spec.lower) - sum_of(spec.upper);
  const Rational ax = abs(x);

  if (degree) {
    if (method == PfqMethod::alternating_acceleration) throw DomainError("acceleration does not apply to a terminating series");
    if (method == PfqMethod::euler_integral_quadrature) return euler_quadrature(spec, ctx);
    SummationOutcome out;
    out.value = pfq_series_real(spec.upper, spec.lower, Real(x, ctx.bits()), ctx.bits(), &out.terms_used);
    out.tail_bound_estimate = Real(0, ctx.bits());
    out.method = SumMethod::direct;
    return out;
  }
  if (spec.upper.size() > spec.lower.size() + 1 && !x.is_zero()) throw DomainError("divergent hypergeometric series");
  const bool unit = balanced && ax == Rational(1);
  if (balanced && ax > Rational(1)) throw DomainError("hypergeometric argument outside the unit disc");
  if (unit && x.sign() > 0 && s.sign() <= 0) {
    throw DomainError("unit-argument series needs sum(lower) - sum(upper) > 0, got " + s.to_string());
  }
  if (unit && x.sign() < 0 && s <= Rational(-1)) throw DomainError("alternating unit-argument series diverges");

  switch (method) {
    case PfqMethod::euler_integral_quadrature:
      return euler_quadrature(spec, ctx);
    case PfqMethod::alternating_acceleration:
      if (!(unit && x.sign() < 0)) throw DomainError("acceleration applies to argument -1 only");
      return alternating(spec, ctx);
    case PfqMethod::direct:
      if (unit && x.sign() < 0) throw DomainError("direct summation does not apply at argument -1");
      if (unit) return unit_direct(spec, ctx);
      break;
    case PfqMethod::automatic:
      if (unit && x.sign() < 0) return alternating(spec, ctx);
      if (unit) return find_ordering(spec) ? euler_quadrature(spec, ctx) : unit_direct(spec, ctx);
      break;
  }
  SummationOutcome out;
  out.value = pfq_series_real(spec.upper, spec.lower, Real(x, ctx.bits()), ctx.bits(), &out.terms_used);
  // geometric tail bound from the last ratio
  const long n = out.terms_used;
  Real rho = abs(Real(term_ratio(spec.upper, spec.lower, n), ctx.bits()) * x);
  if (balanced && rho < Real(ax, ctx.bits())) rho = Real(ax, ctx.bits());
  Real last(1, ctx.bits());
  for (long k = 0; k < n - 1; ++k) {
    last *= term_ratio(spec.upper, spec.lower, k);
    last *= x;
  }
  out.tail_bound_estimate = rho < 1 ? abs(last) * rho / (Real(1, ctx.bits()) - rho) : Real(0, ctx.bits());
  out.method = SumMethod::direct;
  return out;
}

Real gauss_unit(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx) {
  if ((c - a - b).sign() <= 0) throw DomainError("Gauss summation needs c - a - b > 0");
  for (const Rational& v : {c, c - a, c - b}) {
    if (v.is_nonpositive_integer()) throw DomainError("Gauss summation parameter at a gamma pole");
  }
  return gamma_quotient({{c, c - a - b}, {c - a, c - b}}, ctx);
}

Real bailey_half(const Rational& a, const Rational& c, const PrecisionContext& ctx) {
  const Rational half(1, 2);
  if (c.is_nonpositive_integer()) throw DomainError("lower parameter is a nonpositive integer");
  const Rational d1 = (a + c) * half;
  const Rational d2 = (Rational(1) - a + c) * half;
  if (d1.is_nonpositive_integer() || d2.is_nonpositive_integer()) throw DomainError("Bailey quotient at a gamma pole");
  return gamma_quotient({{c * half, (c + Rational(1)) * half}, {d1, d2}}, ctx);
}

Real dixon_wellpoised(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx) {
  const Rational one(1);
  const Rational half_a = a / Rational(2);
  if ((one + half_a - b - c).sign() <= 0) throw DomainError("Dixon series diverges: need 1 + a/2 - b - c > 0");
  GammaQuotientSpec q{{one + half_a, one + half_a - b - c, one + a - b, one + a - c},
                      {one + a, one + a - b - c, one + half_a - b, one + half_a - c}};
  for (const auto& v : q.numerator_args) {
    if (v.is_nonpositive_integer()) throw DomainError("Dixon quotient at a gamma pole");
  }
  for (const auto& v : q.denominator_args) {
    if (v.is_nonpositive_integer()) throw DomainError("Dixon quotient at a gamma pole");
  }
  return gamma_quotient(q, ctx);
}

Real chu_almost_poised(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx) {
  if (b == Rational(1) || c == Rational(1)) throw DomainError("almost-poised formula needs b != 1 and c != 1");
  const Rational two(2);
  const Rational half(1, 2);
  if ((Rational(4) + a - two * b - two * c).sign() <= 0) {
    throw DomainError("almost-poised series diverges: need 4 + a - 2b - 2c > 0");
  }
  const std::vector<Rational> pre_num = {a - b + two, a - c + two};
  const std::vector<Rational> pre_den = {a, a - two * b + two, a - two * c + two, a - b - c + two};
  const std::vector<Rational> first = {(Rational(1) + a) * half, (two + a) * half - b, (two + a) * half - c,
                                       (Rational(5) + a) * half - b - c};
  const std::vector<Rational> second = {a * half, (Rational(3) + a) * half - b, (Rational(3) + a) * half - c,
                                        (Rational(4) + a) * half - b - c};
  for (const auto* group : {&pre_num, &pre_den, &first, &second}) {
    for (const auto& v : *group) {
      if (v.is_nonpositive_integer()) throw DomainError("almost-poised formula at a gamma pole: " + v.to_string());
    }
  }
  const auto inner = ctx.elevated(32);
  const mpfr_prec_t bits = inner.bits();
  Real g1 = gamma_quotient({first, {}}, inner);
  Real g2 = gamma_quotient({second, {}}, inner);
  Real pre = gamma_quotient({pre_num, pre_den}, inner);
  Real scale = pow(Real(2, bits), Real(Rational(1) + two * a - two * b - two * c, bits));
  scale /= pi(bits);
  scale /= Real((b - Rational(1)) * (Rational(1) - c), bits);
  return (scale * pre * (g1 - g2)).rounded(ctx.bits());
}

Real watson_3f2(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx) {
  const Rational half(1, 2);
  const Rational one(1);
  const Rational mid = (a + b + one) * half;
  if ((c - (a + b - one) * half).sign() <= 0) throw DomainError("Watson series diverges: need c > (a + b - 1)/2");
  if (mid.is_nonpositive_integer() || (Rational(2) * c).is_nonpositive_integer()) {
    throw DomainError("lower parameter is a nonpositive integer");
  }
  GammaQuotientSpec q{{half, c + half, mid, c - (a + b - one) * half},
                      {(a + one) * half, (b + one) * half, c - (a - one) * half, c - (b - one) * half}};
  for (const auto& v : q.numerator_args) {
    if (v.is_nonpositive_integer()) throw DomainError("Watson quotient at a gamma pole");
  }
  for (const auto& v : q.denominator_args) {
    if (v.is_nonpositive_integer()) throw DomainError("Watson quotient at a gamma pole");
  }
  return gamma_quotient(q, ctx);
}

Real luke_reduce_3f2(const Rational& a, const Rational& b, const Rational& c, const Rational& z,
                     const PrecisionContext& ctx) {
  const Rational one(1);
  if (a == one || b == one) throw DomainError("reduction needs a != 1 and b != 1; use the digamma form");
  if (z.is_zero()) throw DomainError("reduction divides by z; the series equals 1 at z = 0");
  if (abs(z) > one) throw DomainError("reduction needs |z| <= 1");
  if ((c - one).is_nonpositive_integer()) throw DomainError("lower parameter c - 1 is a nonpositive integer");
  const Rational factor = (c - one) / ((a - one) * (b - one) * z);
  // g - 1 cancels about log2 of the factor's magnitude
  const long cancel = std::max<long>(0, static_cast<long>(mpz_sizeinbase(factor.numerator().get_mpz_t(), 2)) -
                                            static_cast<long>(mpz_sizeinbase(factor.denominator().get_mpz_t(), 2)));
  if (z == one) {
    if ((c - a - b) <= Rational(-1)) throw DomainError("reduction at z = 1 needs c - a - b > -1");
    const auto inner = ctx.elevated(16 + cancel);
    const Rational ca = c - a;
    const Rational cb = c - b;
    Real g(0, inner.bits());
    if (!ca.is_nonpositive_integer() && !cb.is_nonpositive_integer()) {
      g = gamma_quotient({{c - one, c - a - b + one}, {ca, cb}}, inner);
    }
    return (Real(factor, inner.bits()) * (g - Rational(1))).rounded(ctx.bits());
  }
  // 2F1 - 1 loses about log2(1/|z|) bits
  const long extra = 16 + cancel;
  const auto inner = ctx.elevated(extra);
  HypSeriesSpec s{{a - one, b - one}, {c - one}, z};
  SummationOutcome f = pfq_eval(s, inner);
  return (Real(factor, inner.bits()) * (f.value - Rational(1))).rounded(ctx.bits());
}

Real luke_digamma(const Rational& a, const Rational& c, const PrecisionContext& ctx) {
  const Rational one(1);
  if (a == one) throw DomainError("digamma reduction needs a != 1");
  if ((c - a).sign() <= 0) throw DomainError("digamma reduction needs c - a > 0");
  if ((c - one).is_nonpositive_integer() || (c - a).is_nonpositive_integer()) {
    throw DomainError("digamma reduction at a pole");
  }
  const auto inner = ctx.elevated(16);
  Real d = digamma(c - one, inner) - digamma(c - a, inner);
  return (Real((c - one) / (a - one), inner.bits()) * d).rounded(ctx.bits());
}

}  // namespace harmsum
