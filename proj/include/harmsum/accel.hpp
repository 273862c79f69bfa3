#pragma once

#include <functional>

#include "harmsum/numcore.hpp"

namespace harmsum {

/// Σ_{k>=0} (-1)^k a_k by the Cohen-Rodriguez Villegas-Zagier Chebyshev
/// weights of depth n; error about 5.83^(-n) for moment sequences.
Real cvz_alternating(const std::function<Real(long)>& a, long depth, mpfr_prec_t bits);

/// Depth giving `digits` decimal digits: ceil(1.31 digits) + 4.
long cvz_depth(int digits);

struct TailEstimate {
  Real value;
  /// Magnitude of the last correction term included (error indicator).
  Real last_correction;
};

/// Σ_{n>=N} a(n) ≈ ∫_N^∞ a(x) dx + a(N)/2 - Σ_{j=1..orders} B_2j/(2j)! a^(2j-1)(N)
/// for a smooth, eventually monotone a. Derivatives come from central
/// differences evaluated at raised precision, so `a` must honour the
/// precision of its argument.
TailEstimate euler_maclaurin_tail(const std::function<Real(const Real&)>& a, long N, const PrecisionContext& ctx,
                                  int orders = 3);

/// k-th derivative of f at x by a central difference of step h at the
/// precision of x.
Real central_derivative(const std::function<Real(const Real&)>& f, const Real& x, int k, const Real& h);

}  // namespace harmsum
