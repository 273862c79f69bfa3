#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harmsum/numcore.hpp"

namespace harmsum {

enum class Singularity { none, log, inverse_sqrt, exp_decay };

/// f(x, x - a, b - x). The two distances are exact even where x itself
/// rounds to an endpoint, so singular factors should be built from them.
/// On a half-infinite interval the third argument is x.
using Integrand = std::function<Real(const Real& x, const Real& from_left, const Real& to_right)>;

struct IntegrandSpec {
  std::string name;
  Integrand f;
  Rational a;
  /// Upper limit; empty means +infinity.
  std::optional<Rational> b;
  Singularity left = Singularity::none;
  Singularity right = Singularity::none;
};

struct QuadResult {
  Real value;
  int levels_used = 0;
  Real last_level_delta;
  long nodes = 0;
};

/// Double-exponential quadrature (tanh-sinh on [a,b], exp-sinh on (a,inf))
/// with step halving until two levels agree to the context's digits.
/// Integrand evaluation at the nodes of a level runs in parallel; the sum
/// is always accumulated in node order, so the result is bit-identical to
/// tanh_sinh_serial.
QuadResult tanh_sinh(const IntegrandSpec& spec, const PrecisionContext& ctx);
QuadResult tanh_sinh_serial(const IntegrandSpec& spec, const PrecisionContext& ctx);

/// ∫_a^b f with default singularity labels.
Real integrate(const Integrand& f, const Rational& a, const std::optional<Rational>& b,
               const PrecisionContext& ctx, QuadResult* detail = nullptr);

constexpr int kMaxQuadLevel = 14;

/// ∫₀¹ u^(n+1/2) ln(1-u) du = (4 ln2 - 4 O_{n+1} - 4/(2n+3)) / (2n+3).
Real log_moment(long n, const PrecisionContext& ctx);
/// The same moment as -2 (ψ(n + 5/2) + γ) / (2n+3).
Real log_moment_digamma(long n, const PrecisionContext& ctx);
Real log_moment_quadrature(long n, const PrecisionContext& ctx);

/// Named integrals of the catalog, with their integrands and intervals.
IntegrandSpec catalog_integrand(const std::string& name, const PrecisionContext& ctx);
std::vector<std::string> catalog_integrand_names();

/// tanh-sinh value of a catalog integral.
Real proof_integral(const std::string& name, const PrecisionContext& ctx, QuadResult* detail = nullptr);

}  // namespace harmsum
