#pragma once

#include <string_view>
#include <vector>

#include "harmsum/numcore.hpp"

namespace harmsum {

/// pFq[upper; lower; argument].
struct HypSeriesSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational argument;
};

enum class SumMethod {
  direct,
  alternating_acceleration,
  euler_integral_quadrature,
  integral_quadrature,
  euler_maclaurin,
  closed_form
};
enum class PfqMethod { automatic, direct, alternating_acceleration, euler_integral_quadrature };

std::string_view method_name(SumMethod m);

struct SummationOutcome {
  Real value;
  long terms_used = 0;
  Real tail_bound_estimate;
  SumMethod method = SumMethod::direct;
  /// Decimal digits the method certifies; results are good to
  /// min(requested, digit_cap).
  int digit_cap = 1000;
};

constexpr int kUnitArgumentDirectCap = 12;
constexpr int kAlternatingCap = 30;
constexpr int kQuadratureCap = 30;

/// Generalized hypergeometric series. `automatic` picks: terminating and
/// |x| < 1 -> direct; x = -1 -> alternating acceleration; x = 1 -> Euler
/// integral quadrature when a 2F1/3F2 parameter ordering allows it, else
/// direct summation with an Euler-Maclaurin tail (capped at 12 digits).
SummationOutcome pfq_eval(const HypSeriesSpec& spec, const PrecisionContext& ctx,
                          PfqMethod method = PfqMethod::automatic);

/// 2F1(a, b; c; z) for real 0 <= z < 1 with w = 1 - z supplied exactly.
/// Uses the series in z for z <= 1/2 and the 1 - z connection otherwise;
/// the connection coefficients are computed once at construction.
class Hyp2F1 {
 public:
  Hyp2F1(const Rational& a, const Rational& b, const Rational& c, mpfr_prec_t bits);
  Real operator()(const Real& z, const Real& w) const;
  /// True when every z in [0, 1) can be evaluated (c - a - b not an
  /// integer, or the series terminates).
  bool covers_unit_interval() const noexcept { return terminating_ || !integer_gap_; }

 private:
  Rational a_, b_, c_;
  mpfr_prec_t bits_;
  bool terminating_ = false;
  bool integer_gap_ = false;
  Real near_coeff_;
  Real far_coeff_;
};

/// Sum of a convergent pFq at real |x| < 1 by its term recurrence.
Real pfq_series_real(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Real& x,
                     mpfr_prec_t bits, long* terms = nullptr);

Real gauss_unit(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx);
Real bailey_half(const Rational& a, const Rational& c, const PrecisionContext& ctx);
Real dixon_wellpoised(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx);
Real chu_almost_poised(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx);
Real watson_3f2(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx);
/// 3F2[a, b, 1; c, 2; z] through the 2F1[a-1, b-1; c-1; z] reduction, z != 0.
Real luke_reduce_3f2(const Rational& a, const Rational& b, const Rational& c, const Rational& z,
                     const PrecisionContext& ctx);
/// 3F2[a, 1, 1; c, 2; 1] = (c-1)/(a-1) (ψ(c-1) - ψ(c-a)).
Real luke_digamma(const Rational& a, const Rational& c, const PrecisionContext& ctx);

}  // namespace harmsum
