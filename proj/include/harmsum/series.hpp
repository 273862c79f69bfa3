#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "harmsum/hyper.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/numcore.hpp"

namespace harmsum {

/// slope·k + offset.
struct LinearFactor {
  Rational slope;
  Rational offset;
};

/// coeff · X_{scale·k + shift} for harmonic kind X.
struct HarmonicTerm {
  Rational coeff;
  HarmonicKind kind = HarmonicKind::H;
  long scale = 1;
  long shift = 0;
};

/// numerator(k) / Π denominator factors(k) · (Σ harmonic terms, or 1 when
/// there are none).
struct Weight {
  /// Ascending powers of k.
  std::vector<Rational> numerator{Rational(1)};
  std::vector<LinearFactor> denominator;
  std::vector<HarmonicTerm> harmonics;
};

/// Σ_{k>=0} c^k binom(2k,k)^p w(k).
struct SeriesSpec {
  Rational base_ratio;
  int binom_power = 2;
  Weight weight;
};

enum class RateClass { geometric, alternating_unit, positive_unit };

std::string_view rate_class_name(RateClass r);

/// 4^p |c|.
Rational effective_ratio(const SeriesSpec& spec);
/// Throws DomainError for r > 1 or an invalid spec.
RateClass rate_class(const SeriesSpec& spec);

constexpr int kGeometricCap = 1000;
constexpr int kPositiveUnitCap = 10;
constexpr long kPositiveUnitTerms = 300000;

Integer central_binom(long n);

/// The k-th summand as an exact rational.
Rational series_term(const SeriesSpec& spec, long k);

/// Sums the series by its rate class: geometric -> partial sums with a
/// ratio tail bound; alternating_unit -> CVZ (cap 30); positive_unit ->
/// the integral form for lemniscate-like weights (cap 30) or direct
/// summation with an Euler-Maclaurin tail (cap 10). Asking for more digits
/// than the cap throws CapExceededError unless force_cap is set.
SummationOutcome sum_series(const SeriesSpec& spec, const PrecisionContext& ctx, bool force_cap = false);

/// Sum of the first n terms.
Real partial_sum(const SeriesSpec& spec, long n, mpfr_prec_t bits);

/// S_N + ∫_N^∞ t(x) dx and S_N + t_N + ∫_N^∞ t(x) dx, which bracket the sum
/// of a positive unit-rate series whose terms decrease from N on. S_N is the
/// sum of the terms k < N.
struct Bracket {
  Real lower;
  Real upper;
};
Bracket integral_bracket(const SeriesSpec& spec, long N, const PrecisionContext& ctx);

/// L(1/(4n+a)^power) or L(O_{2n}/(4n+a)) where L(f) = Σ (1/4)^n binom(2n,n) f_n,
/// from the integral representations over 1/√(1-x⁴).
/// a > 0, or -4 < a < 0 for the plain kinds; with_odd_harmonic needs a > 0 or
/// a = -2.
Real lemniscate_like(const Rational& a, int power, bool with_odd_harmonic, const PrecisionContext& ctx,
                     QuadResult* detail = nullptr);

/// f_n = ratio^n · P(n) / Π factors(n).
struct CoefficientSpec {
  Rational ratio{1};
  std::vector<Rational> numerator{Rational(1)};
  std::vector<LinearFactor> denominator;
};

struct Lemma1Sides {
  /// Σ (1/16)^n H'_{2n} binom(2n,n)² f_n/(n+1)
  Real lhs;
  /// (4/π) ∫₀¹ √(1-x²) ln x Σ (1/4)^n binom(2n,n) x^{2n} f_n dx
  Real integral;
  /// ½ Σ (1/16)^n binom(2n,n)² (2(n+1) ln2 + 1) f_n/(n+1)²
  Real correction;
  int digit_cap = kGeometricCap;
};

Lemma1Sides lemma1_sides(const CoefficientSpec& f, const PrecisionContext& ctx);
/// |lhs - (integral + correction)|.
Real lemma1_residual(const CoefficientSpec& f, const PrecisionContext& ctx);

/// |Σ t_k - (Σ t_{2m} + Σ t_{2m+1})| with the three sums taken
/// independently. The halves of an alternating unit-rate series diverge,
/// so that class throws DomainError.
Real bisect_residual(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Same check for a smooth positive term a(x), x >= start, summed with an
/// Euler-Maclaurin tail; a must honour the precision of its argument.
Real bisect_residual(const std::function<Real(const Real&)>& a, long start, const PrecisionContext& ctx);

/// Σ_{n>=start} a(n) by direct summation to start + N and an Euler-Maclaurin
/// tail.
Real sum_smooth_positive(const std::function<Real(const Real&)>& a, long start, long N,
                         const PrecisionContext& ctx, int orders = 6);

/// n-th Maclaurin coefficient of 1/((1+u)√(1-u²)) by exact series product,
/// and by (-1/2)^n (n+1) binom(n, floor(n/2)).
Rational cauchy_coefficient_product(long n);
Rational cauchy_coefficient_formula(long n);

/// Σ (1/4)^n binom(2n,n) (1 - x^{4n}) / ((2n-1)(1 - x²)) for 0 < x < 1, good
/// to min(digits, 30).
Real o2n_moment_series(const Rational& x, const PrecisionContext& ctx);
/// √(1-x⁴)/(1-x²).
Real o2n_moment_closed(const Rational& x, const PrecisionContext& ctx);

}  // namespace harmsum
