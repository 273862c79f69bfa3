#include <doctest.h>

#include "harmsum/elliptic.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/series.hpp"
#include "harmsum/special.hpp"

using namespace harmsum;

namespace {

const LinearFactor kPlus1{Rational(1), Rational(1)};
const LinearFactor kTwoMinus1{Rational(2), Rational(-1)};

SeriesSpec sun_summand(const Rational& c) {
  return {c, 2, {{Rational(1)}, {}, {{Rational(2), HarmonicKind::H, 2, 0}, {Rational(-1), HarmonicKind::H, 1, 0}}}};
}

SeriesSpec hk(const Rational& c) { return {c, 2, {{Rational(1)}, {}, {{Rational(1), HarmonicKind::H, 1, 0}}}}; }

Real frozen(const char* text) { return Real::parse(text, 256); }

Real gamma_quarter(mpfr_prec_t bits) { return gamma(Rational(1, 4), PrecisionContext::for_bits(bits)); }

}  // namespace

TEST_CASE("central binomial") {
  CHECK(central_binom(0) == 1);
  CHECK(central_binom(4) == 70);
  CHECK(central_binom(10) == 184756);
  CHECK_THROWS_AS(central_binom(-1), DomainError);
}

TEST_CASE("rate classes") {
  CHECK(rate_class(sun_summand(Rational(1, 32))) == RateClass::geometric);
  CHECK(rate_class(sun_summand(Rational(-1, 16))) == RateClass::alternating_unit);
  SeriesSpec unit = hk(Rational(1, 16));
  CHECK_THROWS_AS(rate_class(unit), DomainError);
  unit.weight.denominator.push_back(kPlus1);
  CHECK(rate_class(unit) == RateClass::positive_unit);
  CHECK(effective_ratio(sun_summand(Rational(1, 32))) == Rational(1, 2));
  CHECK_THROWS_AS(rate_class(SeriesSpec{Rational(1, 2), 1, {}}), DomainError);
  SeriesSpec bad{Rational(1, 32), 2, {{Rational(1)}, {{Rational(1), Rational(-3)}}, {}}};
  CHECK_THROWS_AS(rate_class(bad), DomainError);
  CHECK_THROWS_AS(rate_class(SeriesSpec{Rational(1, 32), 3, {}}), DomainError);
}

TEST_CASE("exact summands") {
  SeriesSpec s{Rational(1, 32), 2, {{Rational(1)}, {kTwoMinus1}, {{Rational(1), HarmonicKind::H, 2, 0}}}};
  CHECK(series_term(s, 0) == Rational(0));
  SeriesSpec plain{Rational(1, 4), 1, {{Rational(1)}, {kTwoMinus1}, {}}};
  CHECK(series_term(plain, 0) == Rational(-1));
  CHECK(series_term(plain, 1) == Rational(1, 2));
  // (1/32)^2 · 36 · (2 H_4 - H_2)
  CHECK(series_term(sun_summand(Rational(1, 32)), 2) == Rational(36, 1024) * Rational(8, 3));
  auto ctx = PrecisionContext::for_digits(20);
  CHECK(digits_agreed(partial_sum(plain, 2, ctx.bits()), Real(Rational(-1, 2), ctx.bits()), 30) >= 20);
}

TEST_CASE("geometric sums") {
  auto ctx = PrecisionContext::for_digits(50);
  const auto sun2 = sum_series(sun_summand(Rational(1, 32)), ctx);
  CHECK(sun2.method == SumMethod::direct);
  CHECK(sun2.digit_cap == kGeometricCap);
  CHECK(sun2.terms_used <= 600);
  CHECK(digits_agreed(sun2.value, frozen("0.40907487915422202781287882754125766839452401073174822489854"), 60) >= 50);
  const auto tau = sum_series(hk(Rational(1, 32)), ctx);
  CHECK(digits_agreed(tau.value, frozen("0.21777516068448380718233503703022937263950278059477400599177"), 60) >= 50);

  SeriesSpec h2k{Rational(1, 32), 2, {{Rational(1)}, {kTwoMinus1}, {{Rational(1), HarmonicKind::H, 2, 0}}}};
  CHECK(digits_agreed(sum_series(h2k, ctx).value,
                      frozen("0.220693635964176850705941658111450495225376108087041449358897"), 60) >= 50);
  SeriesSpec hkk{Rational(1, 32), 2, {{Rational(1)}, {kPlus1}, {{Rational(1), HarmonicKind::H, 1, 0}}}};
  CHECK(digits_agreed(sum_series(hkk, ctx).value,
                      frozen("0.0888084949820658865976103169677576747632906815473162866704639"), 60) >= 50);
}

TEST_CASE("geometric tail bound and doubling") {
  auto ctx = PrecisionContext::for_digits(40);
  for (const SeriesSpec& s : {sun_summand(Rational(1, 32)), hk(Rational(-1, 32)),
                              SeriesSpec{Rational(1, 64), 2, {{Rational(0), Rational(3)}, {kTwoMinus1}, {}}}}) {
    const auto out = sum_series(s, ctx);
    const long n = out.terms_used;
    const Real r(effective_ratio(s), ctx.bits());
    const Real last(series_term(s, n - 1), ctx.bits());
    CHECK(out.tail_bound_estimate <= abs(last) * r / (Real(1, ctx.bits()) - r));
    CHECK(abs(last) * r / (Real(1, ctx.bits()) - r) < ctx.tolerance());
    CHECK(digits_agreed(partial_sum(s, 2 * n, ctx.bits() + 32), out.value, 60) >= 40);
  }
}

TEST_CASE("alternating unit-rate sums") {
  auto ctx = PrecisionContext::for_digits(30);
  const auto a = sum_series(hk(Rational(-1, 16)), ctx);
  CHECK(a.method == SumMethod::alternating_acceleration);
  CHECK(a.digit_cap == kAlternatingCap);
  CHECK(digits_agreed(a.value, frozen("-0.135269328169029328001839757595424651157333251020861213310097"), 40) >= 30);
  const auto s1 = sum_series(sun_summand(Rational(-1, 16)), ctx);
  CHECK(digits_agreed(s1.value, frozen("-0.289259621063017846646851910508196871599742145347334558943702"), 40) >= 30);
  // +25% depth stability
  CHECK(a.tail_bound_estimate < ctx.tolerance() * abs(a.value));
  CHECK(s1.tail_bound_estimate < ctx.tolerance() * abs(s1.value));
  CHECK_THROWS_AS(sum_series(hk(Rational(-1, 16)), PrecisionContext::for_digits(40)), CapExceededError);

  // repeated averaging of plain partial sums
  const mpfr_prec_t bits = 256;
  std::vector<Real> partial;
  Real s(0, bits);
  for (long k = 0; k < 400; ++k) {
    s += Real(series_term(hk(Rational(-1, 16)), k), bits);
    partial.push_back(s);
  }
  for (int round = 0; round < 60; ++round) {
    std::vector<Real> next;
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) next.push_back((partial[i] + partial[i + 1]) / 2L);
    partial = std::move(next);
  }
  CHECK(digits_agreed(partial.back(), a.value, 40) >= 8);
}

TEST_CASE("positive unit-rate sums") {
  auto ctx = PrecisionContext::for_digits(10);
  SeriesSpec choi{Rational(1, 16), 2, {{Rational(1)}, {kTwoMinus1, kTwoMinus1}, {{Rational(1), HarmonicKind::H, 1, 0}}}};
  const auto out = sum_series(choi, ctx);
  CHECK(out.method == SumMethod::euler_maclaurin);
  CHECK(out.digit_cap == kPositiveUnitCap);
  const Real closed = frozen("0.289549031763062564109907407052381633103995518096467242115805");
  CHECK(digits_agreed(out.value, closed, 20) >= 10);
  CHECK_THROWS_AS(sum_series(choi, PrecisionContext::for_digits(20)), CapExceededError);
  CHECK(digits_agreed(sum_series(choi, PrecisionContext::for_digits(20), true).value, closed, 30) >= 10);

  // Σ (1/16)^n binom² /(n+1) = 4/π
  SeriesSpec plain{Rational(1, 16), 2, {{Rational(1)}, {kPlus1}, {}}};
  const auto p = sum_series(plain, ctx);
  CHECK(digits_agreed(p.value, Real(4, 128) / pi(128), 20) >= 10);
  const Bracket br = integral_bracket(plain, 1000, ctx);
  CHECK(br.lower <= p.value);
  CHECK(p.value <= br.upper);
  const Bracket bc = integral_bracket(choi, 1000, ctx);
  CHECK(bc.lower <= out.value);
  CHECK(out.value <= bc.upper);
}

TEST_CASE("lemniscate-like sums") {
  auto ctx = PrecisionContext::for_digits(30);
  const mpfr_prec_t b = ctx.bits() + 32;
  SeriesSpec a_spec{Rational(1, 4), 1, {{Rational(1)}, {{Rational(4), Rational(1)}}, {}}};
  const auto a = sum_series(a_spec, ctx);
  CHECK(a.method == SumMethod::integral_quadrature);
  CHECK(digits_agreed(a.value, frozen("1.31102877714605990523241979494555970684137747571581158140841"), 40) >= 30);
  CHECK_THROWS_AS(sum_series(a_spec, PrecisionContext::for_digits(50)), CapExceededError);
  CHECK(digits_agreed(lemniscate_like(Rational(3), 1, false, ctx),
                      frozen("0.599070117367796103719961246140161939113606331607825779131837"), 40) >= 30);
  // Catalan generating function
  SeriesSpec catalan{Rational(1, 4), 1, {{Rational(1)}, {kPlus1}, {}}};
  CHECK(digits_agreed(sum_series(catalan, ctx).value, Real(2, b), 40) >= 30);
  // Σ (1/4)^n binom/(2n-1) = 0
  SeriesSpec odd{Rational(1, 4), 1, {{Rational(1)}, {kTwoMinus1}, {}}};
  CHECK(abs(sum_series(odd, ctx).value) < ctx.tolerance());
  // L(O_{2n}/(2n-1)) = E(i)
  SeriesSpec ei{Rational(1, 4), 1, {{Rational(1)}, {kTwoMinus1}, {{Rational(1), HarmonicKind::O, 2, 0}}}};
  CHECK(digits_agreed(sum_series(ei, ctx).value,
                      frozen("1.91009889451385600895238104108572164595498380732363736054025"), 40) >= 30);

  const Real g = gamma_quarter(b);
  const Real g34 = gamma(Rational(3, 4), PrecisionContext::for_bits(b));
  const Real p = pi(b);
  const Real l2 = ln2(b);
  // L(1/(4n+3)²) = (4-π)Γ²(3/4)/(4√(2π))
  CHECK(digits_agreed(lemniscate_like(Rational(3), 2, false, ctx),
                      (Real(4, b) - p) * g34 * g34 / (sqrt(p * 2L) * 4L), 40) >= 30);
  // L(1/(4n+1)²) by Dixon: Γ(5/4)³Γ(3/4)/Γ(3/2)
  const auto gq = PrecisionContext::for_bits(b);
  const Real g54 = gamma(Rational(5, 4), gq);
  CHECK(digits_agreed(lemniscate_like(Rational(1), 2, false, ctx), g54 * g54 * g54 * g34 / gamma(Rational(3, 2), gq),
                      40) >= 30);
  // odd-harmonic sums at 4n+1 and 4n+3
  CHECK(digits_agreed(lemniscate_like(Rational(1), 1, true, ctx), l2 * g * g * sqrt(Real(2, b)) * 3L / (sqrt(p) * 32L),
                      40) >= 30);
  CHECK(digits_agreed(lemniscate_like(Rational(3), 1, true, ctx),
                      p * sqrt(p) * (l2 * 3L + Real(2, b)) / (sqrt(Real(2, b)) * g * g * 2L), 40) >= 30);
  // low-precision cross-check by direct summation with an integral tail
  SeriesSpec o5{Rational(1, 4), 1, {{Rational(1)}, {{Rational(4), Rational(5)}}, {{Rational(1), HarmonicKind::O, 2, 0}}}};
  const Bracket br = integral_bracket(o5, 4000, PrecisionContext::for_digits(12));
  const Real v = sum_series(o5, ctx).value;
  CHECK(br.lower <= v);
  CHECK(v <= br.upper);
  CHECK_THROWS_AS(lemniscate_like(Rational(-4), 1, false, ctx), DomainError);
  CHECK_THROWS_AS(lemniscate_like(Rational(-1), 1, true, ctx), DomainError);
}

TEST_CASE("moment identity for O_2n") {
  auto ctx = PrecisionContext::for_digits(30);
  for (const Rational& x : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    CHECK(digits_agreed(o2n_moment_series(x, ctx), o2n_moment_closed(x, ctx), 40) >= 30);
  }
}

TEST_CASE("Cauchy product coefficients") {
  for (long n = 0; n <= 40; ++n) CHECK(cauchy_coefficient_product(n) == cauchy_coefficient_formula(n));
  CHECK(cauchy_coefficient_formula(2) == Rational(3, 2));
  CHECK(cauchy_coefficient_formula(3) == Rational(-3, 2));
}

TEST_CASE("opening identity residuals") {
  auto ctx = PrecisionContext::for_digits(30);
  const CoefficientSpec opening{Rational(1, 2), {Rational(1), Rational(1)}, {}};
  const auto sides = lemma1_sides(opening, ctx);
  CHECK(lemma1_residual(opening, ctx) < ctx.tolerance());
  CHECK(digits_agreed(sides.lhs, frozen("0.0956498592348691103152718952555141478775106150684871094533848"), 40) >= 30);

  auto low = PrecisionContext::for_digits(10);
  CHECK(lemma1_residual(CoefficientSpec{}, low) < low.tolerance());
  CHECK(lemma1_residual(CoefficientSpec{Rational(1), {Rational(1)}, {kPlus1}}, low) < low.tolerance());
  CHECK_THROWS_AS(lemma1_residual(CoefficientSpec{Rational(2), {Rational(1)}, {}}, low), DomainError);
  CHECK_THROWS_AS(lemma1_residual(CoefficientSpec{Rational(1), {Rational(0), Rational(1)}, {}}, low), DomainError);
}

TEST_CASE("bisection residuals") {
  auto ctx = PrecisionContext::for_digits(40);
  CHECK(bisect_residual(sun_summand(Rational(1, 32)), ctx) < ctx.tolerance());
  CHECK_THROWS_AS(bisect_residual(hk(Rational(-1, 16)), PrecisionContext::for_digits(20)), DomainError);

  auto low = PrecisionContext::for_digits(10);
  SeriesSpec plain{Rational(1, 16), 2, {{Rational(1)}, {kPlus1}, {}}};
  CHECK(bisect_residual(plain, low) < low.tolerance());

  // Σ_{n>=1} Γ(n/2 + 3/4) / (n Γ(n/2 + 5/4))
  auto c25 = PrecisionContext::for_digits(25);
  const auto term = [](const Real& n) {
    const auto c = PrecisionContext::for_bits(n.precision() + std::max<long>(0, n.exponent()) + 16);
    const Real h = n.rounded(c.bits()) / 2L;
    Real v = exp(log_gamma(h + Rational(3, 4), c) - log_gamma(h + Rational(5, 4), c)) / n;
    return v.rounded(n.precision());
  };
  CHECK(bisect_residual(term, 1, c25) < c25.tolerance());
}
