#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/hyper.hpp"

namespace harmsum::testing {

// Rationals p/q in (lo, hi) with small denominators.
class Draw {
 public:
  explicit Draw(unsigned seed) : rng_(seed) {}
  Rational operator()(double lo, double hi) {
    static const long dens[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16};
    std::uniform_int_distribution<int> pick(0, 10);
    const long q = dens[pick(rng_)];
    std::uniform_real_distribution<double> u(lo, hi);
    const long p = static_cast<long>(std::floor(u(rng_) * static_cast<double>(q)));
    return Rational(p, q);
  }

 private:
  std::mt19937_64 rng_;
};

struct DrawOutcome {
  std::string theorem;
  int admissible = 0;
  int failures = 0;
  std::vector<std::string> failed_params;
};

// Runs `trial` until `wanted` draws were admissible (no DomainError).
inline DrawOutcome run_draws(const std::string& theorem, int wanted, const std::function<bool(std::string&)>& trial) {
  DrawOutcome out{theorem};
  for (int guard = 0; out.admissible < wanted && guard < 40 * wanted; ++guard) {
    std::string params;
    try {
      if (!trial(params)) {
        ++out.failures;
        out.failed_params.push_back(params);
      }
      ++out.admissible;
    } catch (const DomainError&) {
    }
  }
  return out;
}

// Each summation theorem against an independent evaluation of its series:
// direct summation, or Euler-integral quadrature at x = 1.
inline std::vector<DrawOutcome> theorem_draws(int per_theorem, int want_digits, unsigned seed = 20240611) {
  using R = Rational;
  const auto ctx = PrecisionContext::for_digits(want_digits);
  const auto sum_ctx = PrecisionContext::for_digits(want_digits + 5);
  Draw d(seed);
  const auto agree = [&](const Real& closed, const HypSeriesSpec& s) {
    return digits_agreed(closed, pfq_eval(s, sum_ctx).value, 60) >= want_digits;
  };
  const auto show = [](std::initializer_list<R> xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + x.to_string();
    return s;
  };
  std::vector<DrawOutcome> out;

  out.push_back(run_draws("gauss_unit", per_theorem, [&](std::string& p) {
    R a = d(0.1, 2.5), bb = d(-1.5, 2.5);
    R c = a + bb + d(0.2, 2.5);
    if (c <= a) throw DomainError("redraw");
    p = show({a, bb, c});
    return agree(gauss_unit(a, bb, c, ctx), {{a, bb}, {c}, R(1)});
  }));

  out.push_back(run_draws("bailey_half", per_theorem, [&](std::string& p) {
    R a = d(-3, 3), c = d(0.1, 5);
    p = show({a, c});
    return agree(bailey_half(a, c, ctx), {{a, R(1) - a}, {c}, R(1, 2)});
  }));

  out.push_back(run_draws("dixon_wellpoised", per_theorem, [&](std::string& p) {
    R a = d(0.2, 3), bb = d(0.1, 1.5);
    R c = R(1) + a / R(2) - d(0.3, 2) - bb;
    p = show({a, bb, c});
    return agree(dixon_wellpoised(a, bb, c, ctx), {{a, bb, c}, {R(1) + a - bb, R(1) + a - c}, R(1)});
  }));

  out.push_back(run_draws("watson_3f2", per_theorem, [&](std::string& p) {
    R a = d(-2, 3), bb = d(-2, 3);
    R c = (a + bb - R(1)) / R(2) + d(0.3, 2.5);
    p = show({a, bb, c});
    return agree(watson_3f2(a, bb, c, ctx), {{a, bb, c}, {(a + bb + R(1)) / R(2), R(2) * c}, R(1)});
  }));

  out.push_back(run_draws("chu_almost_poised", per_theorem, [&](std::string& p) {
    R a = d(0.1, 3), bb = d(0.1, 1.6);
    R c = (R(4) + a - R(2) * bb - d(0.4, 3)) / R(2);
    p = show({a, bb, c});
    return agree(chu_almost_poised(a, bb, c, ctx), {{a, bb, c}, {R(2) + a - bb, R(2) + a - c}, R(1)});
  }));

  int unit_draws = 0;
  out.push_back(run_draws("luke_reduce_3f2", per_theorem, [&](std::string& p) {
    R a = d(-2, 3), bb = d(-2, 3);
    R z = d(-1, 1);
    R c = d(0.2, 4);
    if (unit_draws < per_theorem * 3 / 10) {
      z = R(1);
      c = a + bb - R(1) + d(0.3, 2.5);
    }
    p = show({a, bb, c, z});
    const Real closed = luke_reduce_3f2(a, bb, c, z, ctx);
    ++unit_draws;
    return agree(closed, {{a, bb, R(1)}, {c, R(2)}, z});
  }));

  out.push_back(run_draws("luke_digamma", per_theorem, [&](std::string& p) {
    R a = d(-2, 3);
    R c = a + d(0.2, 3);
    p = show({a, c});
    return agree(luke_digamma(a, c, ctx), {{a, R(1), R(1)}, {c, R(2)}, R(1)});
  }));

  return out;
}

}  // namespace harmsum::testing
