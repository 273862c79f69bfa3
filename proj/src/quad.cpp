#include "harmsum/quad.hpp"

#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "harmsum/errors.hpp"
#include "harmsum/special.hpp"

namespace harmsum {

namespace {

enum class Rule { tanh_sinh, exp_sinh };

// Nodes first introduced at one level. For tanh-sinh only t >= 0 is stored
// (the rule is symmetric): `offset` is 1 - tanh(u) with u = (π/2) sinh t.
// For exp-sinh both signs are stored and `offset` is exp(u) = x - a.
struct NodeTable {
  std::vector<double> t;
  std::vector<Real> offset;
  std::vector<Real> weight;
};

double max_abscissa(mpfr_prec_t bits) {
  // Far enough that the endpoint distance drops below 2^(-16 bits).
  const double u = 8.0 * static_cast<double>(bits) * std::log(2.0);
  return std::asinh(2.0 * u / M_PI);
}

std::shared_ptr<const NodeTable> build_nodes(Rule rule, int level, mpfr_prec_t bits) {
  auto table = std::make_shared<NodeTable>();
  const double t_max = max_abscissa(bits);
  const long step = level == 0 ? 1 : 2;
  const long first = level == 0 ? 0 : 1;
  const long scale = 1L << level;
  const Real half_pi = ldexp(pi(bits), -1);
  auto push = [&](long k) {
    const Real t = ldexp(Real(k, bits), -level);
    const Real u = half_pi * sinh(t);
    if (rule == Rule::tanh_sinh) {
      // 1 - tanh u = 2 / (1 + e^{2u}),  1 / cosh^2 u = 4 e^{-2u} / (1 + e^{-2u})^2
      const Real e2 = exp(ldexp(u, 1));
      const Real em2 = Real(1, bits) / e2;
      Real offset = Real(2, bits) / (Real(1, bits) + e2);
      const Real one_p = Real(1, bits) + em2;
      Real weight = half_pi * cosh(t) * 4 * em2 / (one_p * one_p);
      table->t.push_back(t.to_double());
      table->offset.push_back(std::move(offset));
      table->weight.push_back(std::move(weight));
    } else {
      Real e = exp(u);
      Real weight = half_pi * cosh(t) * e;
      table->t.push_back(t.to_double());
      table->offset.push_back(std::move(e));
      table->weight.push_back(std::move(weight));
    }
  };
  for (long k = first; static_cast<double>(k) / static_cast<double>(scale) <= t_max; k += step) {
    push(k);
    if (rule == Rule::exp_sinh && k != 0) push(-k);
  }
  return table;
}

std::shared_ptr<const NodeTable> nodes(Rule rule, int level, mpfr_prec_t bits) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, mpfr_prec_t>, std::shared_ptr<const NodeTable>> cache;
  const auto key = std::make_tuple(static_cast<int>(rule), level, bits);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = build_nodes(rule, level, bits);
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(table));
  return it->second;
}

struct Layout {
  Rule rule;
  Real a;
  Real b;
  Real half;   // (b - a)/2 for finite intervals
  Real width;  // b - a
};

// The two evaluation points a node stands for, written into out[0..1];
// tanh-sinh returns the right and left images, exp-sinh a single point.
int node_points(const Layout& lay, const NodeTable& tab, std::size_t i, const Integrand& f, Real* out) {
  if (lay.rule == Rule::exp_sinh) {
    const Real& dl = tab.offset[i];
    Real x = lay.a + dl;
    out[0] = f(x, dl, x) * tab.weight[i];
    return 1;
  }
  const Real d = lay.half * tab.offset[i];
  const Real w = lay.half * tab.weight[i];
  if (tab.t[i] == 0.0) {
    Real x = lay.a + lay.half;
    out[0] = f(x, lay.half, lay.half) * w;
    return 1;
  }
  Real right_x = lay.b - d;
  Real left_x = lay.a + d;
  Real far = lay.width - d;
  out[0] = f(right_x, far, d) * w;
  out[1] = f(left_x, d, far) * w;
  return 2;
}

// Which side of the rule a contribution belongs to: 0 for t < 0 / left
// endpoint, 1 for t > 0 / right endpoint.
QuadResult run(const IntegrandSpec& spec, const PrecisionContext& ctx, bool parallel) {
  const mpfr_prec_t bits = ctx.bits();
  Layout lay{spec.b ? Rule::tanh_sinh : Rule::exp_sinh, Real(spec.a, bits), Real(bits), Real(bits), Real(bits)};
  if (spec.b) {
    if (!(*spec.b > spec.a)) throw DomainError("empty integration interval");
    lay.b = Real(*spec.b, bits);
    lay.width = Real(*spec.b - spec.a, bits);
    lay.half = ldexp(lay.width, -1);
  }
  const Real tol = ctx.tolerance();
  const Real tiny = ldexp(Real(1, bits), -static_cast<long>(bits) - 16);
  Real raw_sum(0, bits);
  Real previous(0, bits);
  double cut[2] = {1e300, 1e300};
  long evaluated = 0;
  QuadResult result{Real(bits), 0, Real(bits), 0};

  for (int level = 0; level <= kMaxQuadLevel; ++level) {
    auto tab = nodes(lay.rule, level, bits);
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < tab->t.size(); ++i) {
      const double t = tab->t[i];
      if (lay.rule == Rule::exp_sinh) {
        if (t < 0 ? -t <= cut[0] : t <= cut[1]) active.push_back(i);
      } else if (t <= std::max(cut[0], cut[1])) {
        active.push_back(i);
      }
    }
    std::vector<Real> contrib(2 * active.size(), Real(bits));
    std::vector<int> count(active.size(), 0);
    std::exception_ptr failure;
    const auto n = static_cast<long>(active.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (long j = 0; j < n; ++j) {
        try {
          count[j] = node_points(lay, *tab, active[j], spec.f, &contrib[2 * j]);
        } catch (...) {
#pragma omp critical(harmsum_quad_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    } else {
      for (long j = 0; j < n; ++j) count[j] = node_points(lay, *tab, active[j], spec.f, &contrib[2 * j]);
    }
    if (failure) std::rethrow_exception(failure);

    double reach[2] = {0.0, 0.0};
    for (long j = 0; j < n; ++j) {
      const double t = tab->t[active[j]];
      for (int c = 0; c < count[j]; ++c) {
        const Real& v = contrib[2 * j + c];
        raw_sum += v;
        ++evaluated;
        int side;
        if (lay.rule == Rule::exp_sinh) {
          side = t < 0 ? 0 : 1;
        } else {
          side = c == 0 ? 1 : 0;
        }
        if (abs(v) > tiny) reach[side] = std::max(reach[side], std::abs(t));
      }
    }
    Real current = ldexp(raw_sum, -level);
    if (level == 2) {
      cut[0] = reach[0] + 1.0;
      cut[1] = reach[1] + 1.0;
    }
    if (level >= 3) {
      Real delta = abs(current - previous);
      Real scale = max(Real(1, bits), abs(current));
      if (delta <= tol * scale) {
        result.value = current;
        result.levels_used = level;
        result.last_level_delta = delta;
        result.nodes = evaluated;
        return result;
      }
    }
    previous = current;
  }
  throw ConvergenceError("quadrature of '" + spec.name + "' did not converge by level " +
                         std::to_string(kMaxQuadLevel));
}

}  // namespace

QuadResult tanh_sinh(const IntegrandSpec& spec, const PrecisionContext& ctx) { return run(spec, ctx, true); }

QuadResult tanh_sinh_serial(const IntegrandSpec& spec, const PrecisionContext& ctx) {
  return run(spec, ctx, false);
}

Real integrate(const Integrand& f, const Rational& a, const std::optional<Rational>& b,
               const PrecisionContext& ctx, QuadResult* detail) {
  IntegrandSpec spec{"anonymous", f, a, b, Singularity::none, b ? Singularity::none : Singularity::exp_decay};
  QuadResult r = tanh_sinh(spec, ctx);
  Real v = r.value;
  if (detail) *detail = std::move(r);
  return v;
}

Real log_moment(long n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("moment index must be nonnegative");
  const mpfr_prec_t bits = ctx.bits() + 16;
  const Rational m(2 * n + 3);
  Real num = 4 * ln2(bits) - Real(Rational(4) * harmonic(HarmonicKind::O, n + 1) + Rational(4) / m, bits);
  return (num / m).rounded(ctx.bits());
}

Real log_moment_digamma(long n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("moment index must be nonnegative");
  const auto inner = ctx.elevated(16);
  Real psi = digamma(Rational(2 * n + 5, 2), inner);
  return (-2 * (psi + euler_gamma(inner.bits())) / Rational(2 * n + 3)).rounded(ctx.bits());
}

Real log_moment_quadrature(long n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("moment index must be nonnegative");
  const Rational power = Rational(2 * n + 1, 2);
  IntegrandSpec spec{"log_moment",
                     [power](const Real&, const Real& from_left, const Real& to_right) {
                       return pow(from_left, power) * log(to_right);
                     },
                     Rational(0), Rational(1), Singularity::none, Singularity::log};
  return tanh_sinh(spec, ctx).value;
}

namespace {

// 1 - x^2 and 1 - x^4 from x and the exact distance r = 1 - x.
Real one_minus_sq(const Real& x, const Real& r) { return r * (x + Rational(1)); }
Real one_minus_fourth(const Real& x, const Real& r) { return one_minus_sq(x, r) * (x * x + Rational(1)); }

struct CatalogEntry {
  const char* name;
  Singularity left;
  Singularity right;
  Integrand f;
};

const std::vector<CatalogEntry>& catalog_table() {
  static const std::vector<CatalogEntry> table = {
      {"split_total", Singularity::log, Singularity::inverse_sqrt,
       [](const Real& x, const Real& l, const Real& r) {
         const Real two_m = Rational(2) - x * x;
         return sqrt(one_minus_sq(x, r)) * (x * x - Rational(4)) * log(l) / (two_m * sqrt(two_m));
       }},
      {"part_flat", Singularity::log, Singularity::inverse_sqrt,
       [](const Real& x, const Real& l, const Real& r) {
         return sqrt(one_minus_sq(x, r) / (Rational(2) - x * x)) * log(l);
       }},
      {"heavy", Singularity::log, Singularity::inverse_sqrt,
       [](const Real& x, const Real& l, const Real& r) {
         const Real two_m = Rational(2) - x * x;
         return sqrt(one_minus_sq(x, r)) * log(l) / (two_m * sqrt(two_m));
       }},
      {"heavy_u", Singularity::none, Singularity::log,
       [](const Real& u, const Real& l, const Real& r) {
         const Real one_p = u + Rational(1);
         return sqrt(l) * log(r) / (one_p * sqrt(one_p) * sqrt(r)) / 4;
       }},
      {"after_change", Singularity::none, Singularity::log,
       [](const Real& u, const Real& l, const Real& r) {
         return sqrt(l) * log(r) / sqrt(one_minus_sq(u, r)) / 4;
       }},
      {"lemniscate_A", Singularity::none, Singularity::inverse_sqrt,
       [](const Real& x, const Real&, const Real& r) {
         return Real(1, x.precision()) / sqrt(one_minus_fourth(x, r));
       }},
      {"lemniscate_B", Singularity::none, Singularity::inverse_sqrt,
       [](const Real& x, const Real&, const Real& r) { return x * x / sqrt(one_minus_fourth(x, r)); }},
      {"almost_poised", Singularity::log, Singularity::inverse_sqrt,
       [](const Real& x, const Real& l, const Real& r) { return -(x * x * log(l)) / sqrt(one_minus_fourth(x, r)); }},
      {"e_imag", Singularity::none, Singularity::inverse_sqrt,
       [](const Real& x, const Real&, const Real& r) { return sqrt((x * x + Rational(1)) / one_minus_sq(x, r)); }},
      {"catalan", Singularity::none, Singularity::inverse_sqrt,
       [](const Real& x, const Real&, const Real& r) { return Real(1, x.precision()) / sqrt(r); }},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_integrand_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog_table()) out.emplace_back(e.name);
  out.emplace_back("part_heavy");
  return out;
}

IntegrandSpec catalog_integrand(const std::string& name, const PrecisionContext&) {
  const std::string key = name == "part_heavy" ? "heavy" : name;
  for (const auto& e : catalog_table()) {
    if (key == e.name) return IntegrandSpec{name, e.f, Rational(0), Rational(1), e.left, e.right};
  }
  throw DomainError("unknown integral '" + name + "'");
}

Real proof_integral(const std::string& name, const PrecisionContext& ctx, QuadResult* detail) {
  QuadResult r = tanh_sinh(catalog_integrand(name, ctx), ctx);
  Real v = r.value;
  if (detail) *detail = std::move(r);
  return v;
}

}  // namespace harmsum
