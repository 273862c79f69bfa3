#include "harmsum/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <string>

#include "harmsum/accel.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/special.hpp"

namespace harmsum {

namespace {

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational out;
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + *it;
  return out;
}

Real eval_poly(const std::vector<Rational>& c, const Real& x) {
  Real out(0, x.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + *it;
  return out;
}

Rational rational_part(const std::vector<Rational>& num, const std::vector<LinearFactor>& den, long k) {
  Rational out = eval_poly(num, Rational(k));
  for (const auto& f : den) out /= f.slope * Rational(k) + f.offset;
  return out;
}

void check_denominator(const std::vector<LinearFactor>& den) {
  for (const auto& f : den) {
    if (f.slope.is_zero()) {
      if (f.offset.is_zero()) throw DomainError("weight denominator is identically zero");
      continue;
    }
    const Rational root = -f.offset / f.slope;
    if (root.is_integer() && root.sign() >= 0) {
      throw DomainError("weight denominator vanishes at k = " + root.to_string());
    }
  }
}

void validate(const SeriesSpec& spec) {
  if (spec.binom_power != 1 && spec.binom_power != 2) throw DomainError("binom_power must be 1 or 2");
  if (spec.weight.numerator.empty()) throw DomainError("weight numerator is empty");
  check_denominator(spec.weight.denominator);
  for (const auto& h : spec.weight.harmonics) {
    if (h.scale < 1 || h.shift < 0) throw DomainError("harmonic argument must be scale*k + shift with scale >= 1");
  }
}

Rational harmonic_increment(HarmonicKind kind, long m) {
  switch (kind) {
    case HarmonicKind::H:
      return Rational(1, m);
    case HarmonicKind::H_alt:
      return Rational(m % 2 == 1 ? 1 : -1, m);
    case HarmonicKind::O:
      return Rational(1, 2 * m - 1);
    case HarmonicKind::O2:
      return Rational(1, (2 * m - 1) * (2 * m - 1));
    case HarmonicKind::H2:
      return Rational(1, m * m);
  }
  return Rational(0);
}

// c · (binom(2k+2,k+1)/binom(2k,k))^p
Rational base_step(const SeriesSpec& spec, long k) {
  const Rational b(2 * (2 * k + 1), k + 1);
  return spec.binom_power == 2 ? spec.base_ratio * b * b : spec.base_ratio * b;
}

// Sequential generator of the summands t_0, t_1, ...
class TermStream {
 public:
  TermStream(const SeriesSpec& spec, mpfr_prec_t bits) : spec_(spec), bits_(bits), base_(1, bits) {
    for (const auto& h : spec.weight.harmonics) {
      harm_.emplace_back(harmonic(h.kind, h.shift), bits);
      arg_.push_back(h.shift);
    }
  }

  long index() const noexcept { return k_; }

  Real next() {
    Real t = base_ * rational_part(spec_.weight.numerator, spec_.weight.denominator, k_);
    if (!harm_.empty()) {
      Real h(0, bits_);
      for (std::size_t i = 0; i < harm_.size(); ++i) h += harm_[i] * spec_.weight.harmonics[i].coeff;
      t *= h;
    }
    base_ *= base_step(spec_, k_);
    ++k_;
    for (std::size_t i = 0; i < harm_.size(); ++i) {
      const auto& h = spec_.weight.harmonics[i];
      const long target = h.scale * k_ + h.shift;
      for (long m = arg_[i] + 1; m <= target; ++m) harm_[i] += harmonic_increment(h.kind, m);
      arg_[i] = target;
    }
    return t;
  }

 private:
  const SeriesSpec& spec_;
  mpfr_prec_t bits_;
  long k_ = 0;
  Real base_;
  std::vector<Real> harm_;
  std::vector<long> arg_;
};

long degree_excess(const SeriesSpec& spec) {
  return static_cast<long>(spec.weight.numerator.size()) - 1 - static_cast<long>(spec.weight.denominator.size()) +
         (spec.weight.harmonics.empty() ? 0 : 1);
}

// Index past every denominator root and numerator sign change region.
long settle_index(const SeriesSpec& spec) {
  double far = 8;
  for (const auto& f : spec.weight.denominator) {
    if (!f.slope.is_zero()) far = std::max(far, 2 * std::abs((f.offset / f.slope).to_double()) + 2);
  }
  const auto& num = spec.weight.numerator;
  if (num.size() > 1 && !num.back().is_zero()) {
    double bound = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) bound = std::max(bound, std::abs((num[i] / num.back()).to_double()));
    far = std::max(far, 2 * (1 + bound));
  }
  return static_cast<long>(far);
}

SummationOutcome geometric_sum(const SeriesSpec& spec, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 40;
  const Real r(effective_ratio(spec), bits);
  const long excess = std::labs(degree_excess(spec)) + 2;
  const long settle = settle_index(spec);
  const Real eps = ldexp(Real(1, bits), -static_cast<long>(ctx.bits()) - 8);
  const Real one(1, bits);
  TermStream stream(spec, bits);
  Real sum(0, bits);
  Real last(0, bits);
  int quiet = 0;
  for (;;) {
    const long k = stream.index();
    last = stream.next();
    sum += last;
    if (k < settle) continue;
    // weight ratios are at most 1 + excess/k past the settle index
    const Real rho = r * (one + Rational(excess, k + 1));
    if (!(rho < one)) continue;
    const Real bound = abs(last) * rho / (one - rho);
    const Real scale = sum.is_zero() ? one : abs(sum);
    quiet = bound <= eps * scale ? quiet + 1 : 0;
    if (quiet >= 2) break;
    if (k > 40L * static_cast<long>(bits) + 100000) throw ConvergenceError("geometric series did not settle");
  }
  SummationOutcome out;
  out.value = sum.rounded(ctx.bits());
  out.terms_used = stream.index();
  out.tail_bound_estimate = (abs(last) * r / (one - r)).rounded(ctx.bits());
  out.method = SumMethod::direct;
  out.digit_cap = kGeometricCap;
  return out;
}

SummationOutcome alternating_sum(const SeriesSpec& spec, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const long depth = cvz_depth(ctx.digits() + 4);
  const long deep = depth + (depth + 3) / 4;
  TermStream stream(spec, bits);
  std::vector<Real> a;
  a.reserve(static_cast<std::size_t>(deep));
  for (long k = 0; k < deep; ++k) {
    Real t = stream.next();
    a.push_back(k % 2 == 0 ? t : -t);
  }
  const auto seq = [&a](long k) { return a[static_cast<std::size_t>(k)]; };
  const Real shallow = cvz_alternating(seq, depth, bits);
  const Real value = cvz_alternating(seq, deep, bits);
  SummationOutcome out;
  out.value = value.rounded(ctx.bits());
  out.terms_used = deep;
  out.tail_bound_estimate = abs(value - shallow).rounded(ctx.bits());
  out.method = SumMethod::alternating_acceleration;
  out.digit_cap = kAlternatingCap;
  return out;
}

Real harmonic_continued(HarmonicKind kind, const Real& m, const PrecisionContext& c) {
  const mpfr_prec_t bits = c.bits();
  switch (kind) {
    case HarmonicKind::H:
      return digamma(m + Rational(1), c) + euler_gamma(bits);
    case HarmonicKind::O:
      return (digamma(m + Rational(1, 2), c) + euler_gamma(bits)) / 2 + ln2(bits);
    case HarmonicKind::H_alt:
      // H'_m = H_m - H_{m/2} for even m
      return digamma(m + Rational(1), c) - digamma(m / 2 + Rational(1), c);
    default:
      throw DomainError("no smooth continuation for harmonic kind " + std::string(harmonic_name(kind)));
  }
}

// t(x) for real x >= 0 of a unit-rate spec (4^p c = 1).
std::function<Real(const Real&)> continuation(const SeriesSpec& spec) {
  if (effective_ratio(spec) != Rational(1) || spec.base_ratio.sign() < 0) {
    throw DomainError("continuation needs a positive unit-rate series");
  }
  for (const auto& h : spec.weight.harmonics) {
    if (h.kind == HarmonicKind::H_alt && (h.scale % 2 != 0 || h.shift % 2 != 0)) {
      throw DomainError("H_alt continues smoothly only at even arguments");
    }
    if (h.kind == HarmonicKind::O2 || h.kind == HarmonicKind::H2) {
      throw DomainError("no smooth continuation for second-order harmonic weights");
    }
  }
  return [spec](const Real& x) {
    const mpfr_prec_t work = x.precision() + std::max<long>(0, x.exponent()) + 16;
    const auto c = PrecisionContext::for_bits(work);
    const Real xw = x.rounded(work);
    // binom(2x,x)/4^x = Γ(x+1/2)/(√π Γ(x+1))
    Real lb = log_gamma(xw + Rational(1, 2), c) - log_gamma(xw + Rational(1), c) - log(pi(work)) / 2;
    Real t = exp(lb * static_cast<long>(spec.binom_power));
    t *= eval_poly(spec.weight.numerator, xw);
    for (const auto& f : spec.weight.denominator) t /= xw * f.slope + f.offset;
    if (!spec.weight.harmonics.empty()) {
      Real h(0, work);
      for (const auto& ht : spec.weight.harmonics) {
        h += harmonic_continued(ht.kind, xw * ht.scale + Rational(ht.shift), c) * ht.coeff;
      }
      t *= h;
    }
    return t.rounded(x.precision());
  };
}

struct LemniscateMatch {
  Rational scale;
  Rational a;
  int power = 0;
  bool odd_harmonic = false;
};

// w(k) = scale / (4k + a)^power, optionally times O_{2k}.
std::optional<LemniscateMatch> match_lemniscate(const SeriesSpec& spec) {
  if (spec.binom_power != 1 || spec.base_ratio != Rational(1, 4)) return std::nullopt;
  const auto& w = spec.weight;
  if (w.numerator.size() != 1 || w.denominator.empty() || w.denominator.size() > 2) return std::nullopt;
  const auto& f = w.denominator.front();
  for (const auto& g : w.denominator) {
    if (g.slope != f.slope || g.offset != f.offset) return std::nullopt;
  }
  if (f.slope.sign() <= 0) return std::nullopt;
  LemniscateMatch m;
  m.power = static_cast<int>(w.denominator.size());
  m.a = Rational(4) * f.offset / f.slope;
  m.scale = w.numerator.front() * pow(Rational(4) / f.slope, m.power);
  if (w.harmonics.size() > 1) return std::nullopt;
  if (w.harmonics.size() == 1) {
    const auto& h = w.harmonics.front();
    if (h.kind != HarmonicKind::O || h.scale != 2 || h.shift != 0 || m.power != 1) return std::nullopt;
    if (!(m.a.sign() > 0 || m.a == Rational(-2))) return std::nullopt;
    m.scale *= h.coeff;
    m.odd_harmonic = true;
  } else if (!(m.a.sign() > 0 || m.a > Rational(-4))) {
    return std::nullopt;
  }
  return m;
}

int cap_for(const SeriesSpec& spec, RateClass rc) {
  switch (rc) {
    case RateClass::geometric:
      return kGeometricCap;
    case RateClass::alternating_unit:
      return kAlternatingCap;
    case RateClass::positive_unit:
      return match_lemniscate(spec) ? kQuadratureCap : kPositiveUnitCap;
  }
  return kPositiveUnitCap;
}

Real direct_sum(const SeriesSpec& spec, long from, long to, mpfr_prec_t bits, int parity = -1) {
  TermStream stream(spec, bits);
  Real sum(0, bits);
  for (long k = 0; k < to; ++k) {
    Real t = stream.next();
    if (k < from) continue;
    if (parity >= 0 && k % 2 != parity) continue;
    sum += t;
  }
  return sum;
}

SummationOutcome positive_unit_sum(const SeriesSpec& spec, const PrecisionContext& ctx) {
  if (auto m = match_lemniscate(spec)) {
    QuadResult detail;
    Real v = lemniscate_like(m->a, m->power, m->odd_harmonic, ctx, &detail) * m->scale;
    SummationOutcome out;
    out.value = v;
    out.terms_used = detail.nodes;
    out.tail_bound_estimate = detail.last_level_delta;
    out.method = SumMethod::integral_quadrature;
    out.digit_cap = kQuadratureCap;
    return out;
  }
  const auto cont = continuation(spec);
  const long N = kPositiveUnitTerms;
  const Real head = direct_sum(spec, 0, N, ctx.bits() + 32);
  const TailEstimate tail = euler_maclaurin_tail(cont, N, ctx.elevated(16));
  SummationOutcome out;
  out.value = (head + tail.value).rounded(ctx.bits());
  out.terms_used = N;
  out.tail_bound_estimate = tail.last_correction.rounded(ctx.bits());
  out.method = SumMethod::euler_maclaurin;
  out.digit_cap = kPositiveUnitCap;
  return out;
}

Real sqrt_one_minus_x4(const Real& x, const Real& r) { return sqrt(r * (x + Rational(1)) * (x * x + Rational(1))); }

Real log_x(const Real& x, const Real& r) { return x < Real(Rational(1, 2), x.precision()) ? log(x) : log1p(-r); }

}  // namespace

std::string_view rate_class_name(RateClass r) {
  switch (r) {
    case RateClass::geometric:
      return "geometric";
    case RateClass::alternating_unit:
      return "alternating_unit";
    case RateClass::positive_unit:
      return "positive_unit";
  }
  return "?";
}

Rational effective_ratio(const SeriesSpec& spec) {
  return abs(spec.base_ratio) * pow(Rational(4), spec.binom_power);
}

RateClass rate_class(const SeriesSpec& spec) {
  validate(spec);
  const Rational r = effective_ratio(spec);
  if (r < Rational(1)) return RateClass::geometric;
  if (r > Rational(1)) throw DomainError("series diverges: effective ratio " + r.to_string() + " > 1");
  // at unit rate the summand behaves like k^(excess - p/2), times log k for H and O
  const Rational decay = Rational(spec.binom_power, 2) -
                         Rational(static_cast<long>(spec.weight.numerator.size()) - 1 -
                                  static_cast<long>(spec.weight.denominator.size()));
  if (spec.base_ratio.sign() < 0) {
    if (decay.sign() <= 0) throw DomainError("alternating unit-rate series diverges: summand does not tend to 0");
    return RateClass::alternating_unit;
  }
  if (decay <= Rational(1)) throw DomainError("positive unit-rate series diverges: summand decays too slowly");
  return RateClass::positive_unit;
}

Integer central_binom(long n) {
  if (n < 0) throw DomainError("central_binom needs n >= 0");
  Integer b = 1;
  for (long k = 0; k < n; ++k) b = b * (2 * (2 * k + 1)) / (k + 1);
  return b;
}

Rational series_term(const SeriesSpec& spec, long k) {
  validate(spec);
  const Integer b = central_binom(k);
  Rational t = pow(spec.base_ratio, k) * Rational(spec.binom_power == 2 ? Integer(b * b) : b);
  t *= rational_part(spec.weight.numerator, spec.weight.denominator, k);
  if (!spec.weight.harmonics.empty()) {
    Rational h;
    for (const auto& ht : spec.weight.harmonics) h += ht.coeff * harmonic(ht.kind, ht.scale * k + ht.shift);
    t *= h;
  }
  return t;
}

SummationOutcome sum_series(const SeriesSpec& spec, const PrecisionContext& ctx, bool force_cap) {
  const RateClass rc = rate_class(spec);
  const int cap = cap_for(spec, rc);
  if (ctx.digits() > cap && !force_cap) {
    throw CapExceededError("requested " + std::to_string(ctx.digits()) + " digits but " +
                               std::string(rate_class_name(rc)) + " summation certifies " + std::to_string(cap),
                           cap);
  }
  switch (rc) {
    case RateClass::geometric:
      return geometric_sum(spec, ctx);
    case RateClass::alternating_unit:
      return alternating_sum(spec, ctx);
    case RateClass::positive_unit:
      return positive_unit_sum(spec, ctx);
  }
  throw DomainError("unknown rate class");
}

Real partial_sum(const SeriesSpec& spec, long n, mpfr_prec_t bits) {
  validate(spec);
  return direct_sum(spec, 0, n, bits);
}

Bracket integral_bracket(const SeriesSpec& spec, long N, const PrecisionContext& ctx) {
  if (rate_class(spec) != RateClass::positive_unit) throw DomainError("bracketing needs a positive unit-rate series");
  const auto cont = continuation(spec);
  const mpfr_prec_t bits = ctx.bits();
  TermStream stream(spec, bits + 32);
  Real head(0, bits + 32);
  for (long k = 0; k < N; ++k) head += stream.next();
  const Real tN = stream.next();
  IntegrandSpec is{"series_tail", [&cont](const Real& x, const Real&, const Real&) { return cont(x); }, Rational(N),
                   std::nullopt, Singularity::none, Singularity::exp_decay};
  const Real integral = tanh_sinh(is, ctx).value;
  return {(head + integral).rounded(bits), (head + tN + integral).rounded(bits)};
}

Real lemniscate_like(const Rational& a, int power, bool with_odd_harmonic, const PrecisionContext& ctx,
                     QuadResult* detail) {
  if (power != 1 && power != 2) throw DomainError("lemniscate-like sums take power 1 or 2");
  const mpfr_prec_t bits = ctx.bits();
  IntegrandSpec spec;
  spec.a = Rational(0);
  spec.b = Rational(1);
  spec.right = Singularity::inverse_sqrt;
  Real constant(0, bits);
  if (with_odd_harmonic) {
    if (power != 1) throw DomainError("odd-harmonic lemniscate-like sums take power 1");
    if (a == Rational(-2)) {
      spec.name = "odd_harmonic_2n_minus_1";
      // the weight is O_{2n}/(4n-2), half of the E(i) integrand
      spec.f = [](const Real& x, const Real&, const Real& r) {
        return sqrt((x * x + Rational(1)) / (r * (x + Rational(1)))) / 2L;
      };
    } else if (a.sign() > 0) {
      const Rational q = a / Rational(4);
      const auto g = ctx.elevated(8);
      // L(1/(4n+a)) = B(a/4, 1/2)/4
      const Real full = (beta(q, Rational(1, 2), g) / 4).rounded(bits + 8);
      const Hyp2F1 f(Rational(1, 2), q, q + Rational(1), bits + 8);
      spec.name = "odd_harmonic_4n_plus_a";
      spec.f = [full, f, a](const Real& y, const Real&, const Real& r) {
        const Real y2 = y * y;
        const Real w = r * (y + Rational(1)) * (y2 + Rational(1));
        const Real g = full - f(y2 * y2, w) / a;
        return g / (r * (y + Rational(1)));
      };
    } else {
      throw DomainError("odd-harmonic lemniscate-like sum needs a > 0 or a = -2");
    }
  } else if (a.sign() > 0) {
    const Rational e = a - Rational(1);
    spec.left = e.sign() < 0 ? Singularity::inverse_sqrt : Singularity::none;
    spec.name = "lemniscate_4n_plus_a";
    spec.f = [e, power](const Real& x, const Real&, const Real& r) {
      Real v = pow(x, e) / sqrt_one_minus_x4(x, r);
      return power == 1 ? v : -(v * log_x(x, r));
    };
  } else if (a > Rational(-4)) {
    if (a.is_zero()) throw DomainError("lemniscate-like sum with a = 0 has a zero denominator");
    // n = 0 term separately; Σ_{n>=1} (1/4)^n binom x^{4n} = x^4/(s(1+s))
    const Rational e = a + Rational(3);
    constant = Real(power == 1 ? Rational(1) / a : Rational(1) / (a * a), bits);
    spec.name = "lemniscate_4n_minus";
    spec.f = [e, power](const Real& x, const Real&, const Real& r) {
      const Real s = sqrt_one_minus_x4(x, r);
      Real v = pow(x, e) / (s * (s + Rational(1)));
      return power == 1 ? v : -(v * log_x(x, r));
    };
  } else {
    throw DomainError("lemniscate-like sum needs a > -4");
  }
  QuadResult res = tanh_sinh(spec, ctx);
  Real value = constant + res.value;
  if (detail) *detail = res;
  return value.rounded(bits);
}

Real sum_smooth_positive(const std::function<Real(const Real&)>& a, long start, long N, const PrecisionContext& ctx,
                         int orders) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  Real head(0, bits);
  for (long n = start; n < start + N; ++n) head += a(Real(n, bits));
  const TailEstimate tail = euler_maclaurin_tail(a, start + N, ctx.elevated(16), orders);
  return (head + tail.value).rounded(ctx.bits());
}

Lemma1Sides lemma1_sides(const CoefficientSpec& f, const PrecisionContext& ctx) {
  if (f.ratio.sign() <= 0 || f.ratio > Rational(1)) throw DomainError("inadmissible f: need 0 < ratio <= 1");
  if (f.numerator.empty()) throw DomainError("inadmissible f: empty numerator");
  check_denominator(f.denominator);
  const LinearFactor n_plus_1{Rational(1), Rational(1)};
  SeriesSpec lhs{f.ratio / Rational(16), 2, {f.numerator, f.denominator, {}}};
  lhs.weight.denominator.push_back(n_plus_1);
  SeriesSpec corr1 = lhs;
  SeriesSpec corr2 = lhs;
  corr2.weight.denominator.push_back(n_plus_1);
  lhs.weight.harmonics.push_back({Rational(1), HarmonicKind::H_alt, 2, 0});
  const mpfr_prec_t bits = ctx.bits();

  IntegrandSpec is;
  is.name = "lemma1_integral";
  is.a = Rational(0);
  is.b = Rational(1);
  is.left = Singularity::log;
  if (f.ratio == Rational(1)) {
    if (f.numerator.size() != 1) throw DomainError("no closed inner sum for this unit-ratio f");
    const Rational k = f.numerator.front();
    if (f.denominator.empty()) {
      // Σ (1/4)^n binom x^{2n} = 1/√(1-x²)
      is.f = [k](const Real& x, const Real&, const Real& r) { return log_x(x, r) * k; };
    } else if (f.denominator.size() == 1 && f.denominator[0].slope == f.denominator[0].offset) {
      // Σ (1/4)^n binom x^{2n}/(n+1) = 2/(1 + √(1-x²))
      const Rational kk = k / f.denominator[0].slope;
      is.f = [kk](const Real& x, const Real&, const Real& r) {
        const Real s = sqrt(r * (x + Rational(1)));
        return s * log_x(x, r) * 2 / (s + Rational(1)) * kk;
      };
    } else {
      throw DomainError("no closed inner sum for this unit-ratio f");
    }
  } else {
    const mpfr_prec_t work = bits + 16;
    const double per_term = -std::log2(f.ratio.to_double());
    const long terms = static_cast<long>(static_cast<double>(work) / per_term) + 64;
    auto coeff = std::make_shared<std::vector<Real>>();
    Real b(1, work);
    for (long n = 0; n < terms; ++n) {
      coeff->push_back(b * rational_part(f.numerator, f.denominator, n));
      // (1/4)^n binom(2n,n) ratio^n
      b *= Rational(2 * n + 1, 2 * n + 2) * f.ratio;
    }
    is.f = [coeff, work](const Real& x, const Real&, const Real& r) {
      const Real x2 = (x * x).rounded(work);
      Real s(0, work);
      Real p(1, work);
      for (const auto& c : *coeff) {
        s += c * p;
        p *= x2;
      }
      return sqrt(r * (x + Rational(1))) * log_x(x, r) * s;
    };
  }
  Lemma1Sides out;
  const auto s_lhs = sum_series(lhs, ctx, true);
  const auto s1 = sum_series(corr1, ctx, true);
  const auto s2 = sum_series(corr2, ctx, true);
  out.digit_cap = std::min({s_lhs.digit_cap, s1.digit_cap, s2.digit_cap, kQuadratureCap});
  out.lhs = s_lhs.value;
  out.correction = ln2(bits) * s1.value + s2.value / 2;

  const auto g = ctx.elevated(8);
  out.integral = (tanh_sinh(is, g).value * 4 / pi(g.bits())).rounded(bits);
  return out;
}

Real lemma1_residual(const CoefficientSpec& f, const PrecisionContext& ctx) {
  const Lemma1Sides s = lemma1_sides(f, ctx);
  return abs(s.lhs - (s.integral + s.correction));
}

Real bisect_residual(const SeriesSpec& spec, const PrecisionContext& ctx) {
  const RateClass rc = rate_class(spec);
  const Real full = sum_series(spec, ctx, true).value;
  if (rc == RateClass::alternating_unit) {
    throw DomainError("the even and odd halves of an alternating unit-rate series diverge");
  }
  Real even(0, ctx.bits());
  Real odd(0, ctx.bits());
  if (rc == RateClass::geometric) {
    // each half is geometric with ratio r²; reuse the full stopping rule on
    // an index range long enough for both
    const long n = sum_series(spec, ctx.elevated(8)).terms_used + 2;
    even = direct_sum(spec, 0, n, ctx.bits() + 40, 0);
    odd = direct_sum(spec, 0, n, ctx.bits() + 40, 1);
  } else {
    const auto cont = continuation(spec);
    const auto at_even = [cont](const Real& m) { return cont(m * 2); };
    const auto at_odd = [cont](const Real& m) { return cont(m * 2 + Rational(1)); };
    const long N = kPositiveUnitTerms;
    const auto tail_ctx = ctx.elevated(16);
    even = direct_sum(spec, 0, 2 * N, ctx.bits() + 32, 0) + euler_maclaurin_tail(at_even, N, tail_ctx).value;
    odd = direct_sum(spec, 0, 2 * N, ctx.bits() + 32, 1) + euler_maclaurin_tail(at_odd, N, tail_ctx).value;
  }
  return abs(full - (even + odd));
}

Real bisect_residual(const std::function<Real(const Real&)>& a, long start, const PrecisionContext& ctx) {
  const long N = 2000;
  const Real full = sum_smooth_positive(a, start, N, ctx);
  // n = 2m and n = 2m + 1 with the same first index
  const long m0 = (start + 1) / 2;
  const long m1 = start / 2;
  const auto at_even = [&a](const Real& m) { return a(m * 2); };
  const auto at_odd = [&a](const Real& m) { return a(m * 2 + Rational(1)); };
  const Real even = sum_smooth_positive(at_even, m0, N, ctx);
  const Real odd = sum_smooth_positive(at_odd, m1, N, ctx);
  return abs(full - (even + odd));
}

Rational cauchy_coefficient_product(long n) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  // 1/(1+u) = Σ (-1)^j u^j and 1/√(1-u²) = Σ binom(2m,m)/4^m u^{2m}
  std::vector<Rational> geo(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> root(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) geo[static_cast<std::size_t>(j)] = Rational(j % 2 == 0 ? 1 : -1);
  Rational c(1);
  for (long m = 0; 2 * m <= n; ++m) {
    root[static_cast<std::size_t>(2 * m)] = c;
    c *= Rational(2 * m + 1, 2 * m + 2);
  }
  Rational out;
  for (long j = 0; j <= n; ++j) out += geo[static_cast<std::size_t>(j)] * root[static_cast<std::size_t>(n - j)];
  return out;
}

Rational cauchy_coefficient_formula(long n) {
  if (n < 0) throw DomainError("coefficient index must be >= 0");
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
  return pow(Rational(-1, 2), n) * Rational(n + 1) * Rational(b);
}

Real o2n_moment_series(const Rational& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0 || x >= Rational(1)) throw DomainError("moment identity needs 0 < x < 1");
  const LinearFactor two_n_minus_1{Rational(2), Rational(-1)};
  const SeriesSpec full{Rational(1, 4), 1, {{Rational(1)}, {two_n_minus_1}, {}}};
  const SeriesSpec powered{pow(x, 4) / Rational(4), 1, {{Rational(1)}, {two_n_minus_1}, {}}};
  const Real a = sum_series(full, ctx, true).value;
  const Real b = sum_series(powered, ctx).value;
  return (a - b) / Real(Rational(1) - x * x, ctx.bits());
}

Real o2n_moment_closed(const Rational& x, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  return sqrt(Real(Rational(1) - pow(x, 4), bits)) / Real(Rational(1) - x * x, bits);
}

}  // namespace harmsum
