#pragma once

#include <memory>
#include <vector>

#include "harmsum/numcore.hpp"

namespace harmsum {

/// Product of Γ over numerator_args divided by product of Γ over
/// denominator_args.
struct GammaQuotientSpec {
  std::vector<Rational> numerator_args;
  std::vector<Rational> denominator_args;
};

/// log|Γ(x)|; `sign`, when given, receives the sign of Γ(x).
Real log_gamma(const Real& x, const PrecisionContext& ctx, int* sign = nullptr);
Real log_gamma(const Rational& x, const PrecisionContext& ctx, int* sign = nullptr);

Real gamma(const Real& x, const PrecisionContext& ctx);
Real gamma(const Rational& x, const PrecisionContext& ctx);

Real digamma(const Real& x, const PrecisionContext& ctx);
Real digamma(const Rational& x, const PrecisionContext& ctx);

/// β(x, y) = Γ(x)Γ(y)/Γ(x+y) for x, y > 0.
Real beta(const Rational& x, const Rational& y, const PrecisionContext& ctx);

Real gamma_quotient(const GammaQuotientSpec& spec, const PrecisionContext& ctx);

/// Rising factorial (a)_n.
Real pochhammer(const Rational& a, long n, const PrecisionContext& ctx);
Rational pochhammer_exact(const Rational& a, long n);
Real pochhammer(const Real& a, long n);

/// Even-index Bernoulli numbers B_0, B_2, ..., B_{2(count-1)}. The returned
/// table is immutable and may be longer than requested.
std::shared_ptr<const std::vector<Rational>> bernoulli_even(std::size_t count);

}  // namespace harmsum
