#pragma once

#include <optional>

#include "harmsum/numcore.hpp"

namespace harmsum {

/// Modulus of a complete elliptic integral: a number in [0, 1) or one of
/// two exact tokens.
class Modulus {
 public:
  enum class Kind { numeric, one_over_sqrt2, imaginary_unit };

  static Modulus of(const Real& k);
  static Modulus of(const Rational& k);
  static Modulus one_over_sqrt2() { return Modulus(Kind::one_over_sqrt2); }
  static Modulus imaginary_unit() { return Modulus(Kind::imaginary_unit); }

  Kind kind() const noexcept { return kind_; }
  /// The numeric modulus; meaningful only for Kind::numeric.
  const Real& value() const noexcept { return k_; }
  /// Set when the modulus was given as a rational.
  const std::optional<Rational>& exact() const noexcept { return exact_; }

 private:
  explicit Modulus(Kind kind) : kind_(kind) {}
  Kind kind_;
  Real k_;
  std::optional<Rational> exact_;
};

/// K(k) = π / (2 AGM(1, √(1-k²))).
Real ell_k(const Modulus& m, const PrecisionContext& ctx);
/// E(k) by the AGM with the c_n² corrections; E(i) = √2 E(1/√2).
Real ell_e(const Modulus& m, const PrecisionContext& ctx);

/// Σ binom(2n,n)² yⁿ/(n+1) = E(4√y)/(4πy) + 4(1 - 1/(16y)) K(4√y)/π for
/// 0 < y < 1/16.
Real gf_binomsq(const Rational& y, const PrecisionContext& ctx);

struct EllipticOdeResidual {
  /// dE/dk - (E - K)/k
  Real e_residual;
  /// dK/dk - (E - (1-k²)K)/(k(1-k²))
  Real k_residual;
};

/// Residuals of the two derivative identities at k, with derivatives from
/// five-point central differences of step h.
EllipticOdeResidual ode_residuals(const Real& k, const Real& h, const PrecisionContext& ctx);

}  // namespace harmsum
