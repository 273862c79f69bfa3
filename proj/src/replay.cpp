#include "harmsum/replay.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <json.hpp>
#include <tuple>

#include "harmsum/elliptic.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/expr.hpp"
#include "harmsum/hyper.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/series.hpp"
#include "harmsum/special.hpp"
#include "harmsum/verify.hpp"

namespace harmsum {

namespace {

constexpr long kSmoothTerms = 2000;

// Γ(x+p)/Γ(x+q); the log-gamma difference loses about log2 x bits.
Real gamma_ratio(const Real& x, const Rational& p, const Rational& q) {
  const mpfr_prec_t bits = x.precision();
  const long e = std::max(0L, x.exponent());
  if (2 * e > bits + 16) {
    const Rational d = p - q;
    return pow(x, d) * (Rational(1) + (d * (p + q - Rational(1)) / Rational(2)) / x);
  }
  const auto ctx = PrecisionContext::for_bits(bits + e + 16);
  const Real xw = x.rounded(ctx.bits());
  return exp(log_gamma(xw + p, ctx) - log_gamma(xw + q, ctx)).rounded(bits);
}

class Replayer {
 public:
  explicit Replayer(int digits)
      : digits_(digits), ctx_(PrecisionContext::for_digits(digits + 5)), bits_(ctx_.bits()) {}

  const PrecisionContext& ctx() const { return ctx_; }
  mpfr_prec_t bits() const { return bits_; }

  Real closed(const char* text) const { return Expr::parse(text).eval(ctx_); }
  Real num(long p, long q = 1) const { return Real(Rational(p, q), bits_); }

  Real integral(const std::string& name) {
    auto it = integrals_.find(name);
    if (it == integrals_.end()) it = integrals_.emplace(name, proof_integral(name, ctx_)).first;
    return it->second;
  }

  /// Left side of a catalog record (series or pFq kinds).
  Real series(const std::string& id) {
    auto it = series_.find(id);
    if (it == series_.end()) {
      const LhsDescriptor& d = find_record(id).lhs;
      Real v = d.kind == LhsDescriptor::Kind::pfq ? pfq_eval(d.pfq, ctx_).value : sum_series(d.series, ctx_, true).value;
      it = series_.emplace(id, std::move(v)).first;
    }
    return it->second;
  }

  Real rhs(const std::string& id) const { return find_record(id).rhs.eval(ctx_); }

  /// Σ (1/4)^n binom(2n,n) f_n with f_n = 1/(4n+a)^power or O_2n/(4n+a).
  Real L(long a, int power = 1, bool odd = false) {
    const auto key = std::make_tuple(a, power, odd);
    auto it = lemn_.find(key);
    if (it == lemn_.end()) it = lemn_.emplace(key, lemniscate_like(Rational(a), power, odd, ctx_)).first;
    return it->second;
  }

  Real smooth(const std::function<Real(const Real&)>& a, long start) {
    return sum_smooth_positive(a, start, kSmoothTerms, ctx_);
  }

  ReplayStep step(int index, const char* numeral, const char* title, const char* anchor, int cap = 30,
                  bool structural = false) const {
    ReplayStep s;
    s.index = index;
    s.numeral = numeral;
    s.title = title;
    s.anchor = anchor;
    s.cap = cap;
    s.structural = structural;
    return s;
  }

  static void check(ReplayStep& s, std::string label, const Real& lhs, const Real& rhs) {
    s.checks.push_back({std::move(label), lhs, rhs, abs(lhs - rhs)});
  }

  void finish(ReplayStep& s) const {
    const int k = std::min(digits_, s.cap);
    s.tolerance = Real(1, bits_) / pow(Real(10, bits_), static_cast<long>(k));
    s.residual = Real(0, bits_);
    for (const auto& c : s.checks) s.residual = max(s.residual, c.residual);
    s.pass = s.residual < s.tolerance;
  }

  Lemma1Sides lemma;
  Real s_full, s_even, s_odd;

 private:
  int digits_;
  PrecisionContext ctx_;
  mpfr_prec_t bits_;
  std::map<std::string, Real> integrals_;
  std::map<std::string, Real> series_;
  std::map<std::tuple<long, int, bool>, Real> lemn_;
};

using Step = std::function<ReplayStep(Replayer&)>;

std::vector<Step> chain() {
  std::vector<Step> out;

  out.push_back([](Replayer& r) {
    auto s = r.step(1, "i", "opening identity with f_n = 2^-n (n+1)", "setting f_n = 2^{-n}(n+1)");
    r.lemma = lemma1_sides({Rational(1, 2), {Rational(1), Rational(1)}, {}}, r.ctx());
    s.cap = r.lemma.digit_cap;
    r.check(s, "lemma sides", r.lemma.lhs, r.lemma.integral + r.lemma.correction);
    r.check(s, "left side as the H_2n - H_n series", r.lemma.lhs, r.series("main_desired"));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(2, "ii", "elliptic generating function and singular values",
                    "the elliptic integral singular values shown");
    r.check(s, "K(1/sqrt 2)", ell_k(Modulus::one_over_sqrt2(), r.ctx()), r.rhs("k_singular"));
    r.check(s, "E(1/sqrt 2)", ell_e(Modulus::one_over_sqrt2(), r.ctx()), r.rhs("e_singular"));
    r.check(s, "binom^2/(n+1) generating function at 1/32", gf_binomsq(Rational(1, 32), r.ctx()),
            r.series("gf_half"));
    r.check(s, "correction series", r.lemma.correction,
            r.closed("4*sqrt(pi)/Gamma(1/4)^2 + ln2*Gamma(1/4)^2/(2*pi^(3/2))"));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(3, "iii", "generalized binomial theorem", "By the generalized binomial theorem");
    const SeriesSpec inner{Rational(1, 32), 1, {{Rational(1), Rational(1)}, {}, {}}};
    r.check(s, "inner series at x = 1/2", sum_series(inner, r.ctx()).value,
            r.closed("sqrt(2)*(15/8)/(7/4)^(3/2)"));
    const Real k = r.closed("-4/(pi*sqrt(2))");
    r.check(s, "integral term", r.lemma.integral, k * r.integral("split_total"));
    r.check(s, "series after the reduction", r.series("main_desired"),
            k * r.integral("split_total") +
                r.closed("4*sqrt(pi)/Gamma(1/4)^2 + Gamma(1/4)^2*ln2/(2*pi^(3/2))"));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(4, "iv", "integral split", "We may rewrite");
    r.check(s, "split", r.integral("split_total"), -r.integral("part_flat") - r.integral("heavy") * 2L);
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(5, "v", "change of variables 1 - x^2 = u", "the change of variables such that");
    r.check(s, "first integral", r.integral("part_flat"), r.integral("after_change"));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(6, "vi", "term-by-term log expansion", "using the Dominated Convergence Theorem");
    for (long n : {1L, 2L, 5L}) {
      IntegrandSpec m{"moment", [n](const Real& u, const Real&, const Real& to_right) {
                        return pow(u, Rational(2 * n + 1, 2)) / sqrt(to_right * (u + Rational(1)));
                      },
                      Rational(0), Rational(1), Singularity::none, Singularity::inverse_sqrt};
      const Real beta_form = r.closed("sqrt(pi)/2") * gamma(Rational(2 * n + 3, 4), r.ctx()) /
                             gamma(Rational(2 * n + 5, 4), r.ctx());
      r.check(s, "moment n = " + std::to_string(n), tanh_sinh(m, r.ctx()).value, beta_form);
    }
    r.s_full = r.smooth([](const Real& x) { return gamma_ratio(x / 2L, Rational(3, 4), Rational(5, 4)) / x; }, 1);
    r.check(s, "expanded integral", r.integral("after_change"), -r.closed("sqrt(pi)/8") * r.s_full);
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(7, "vii", "series bisection", "Applying a series bisection", 30, true);
    r.s_even = r.smooth([](const Real& m) { return gamma_ratio(m, Rational(3, 4), Rational(5, 4)) / m; }, 1);
    r.s_odd = r.smooth(
        [](const Real& m) { return gamma_ratio(m, Rational(1, 4), Rational(3, 4)) / (m * 2L - Rational(1)); }, 1);
    r.check(s, "whole vs halves", r.s_full, r.s_even / 2L + r.s_odd);
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(8, "viii", "index shift and digamma evaluation", "Applying an index shift");
    const Real luke = luke_digamma(Rational(7, 4), Rational(9, 4), r.ctx());
    r.check(s, "3F2[7/4,1,1; 9/4,2; 1] digamma vs Euler integral", luke, r.series("luke_3f2"));
    r.check(s, "shifted series", r.s_even,
            r.closed("12*Gamma(3/4)/(5*Gamma(1/4))") * luke);
    r.check(s, "first half closed", r.closed("sqrt(pi)/16") * r.s_even,
            r.closed("-pi^(3/2)*(pi + 2*ln2 - 8)/(4*sqrt(2)*Gamma(1/4)^2)"));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(9, "ix", "Watson-derived 3F2 evaluation", "the Watson-derived");
    const Real ccd = r.series("3f2_ccd");
    const Real watson = (Rational(1) - watson_3f2(Rational(-1, 2), Rational(1), Rational(1, 4), r.ctx())) * Rational(3);
    r.check(s, "3F2[1/2,1,5/4; 3/2,7/4; 1] Euler integral vs Watson", ccd, watson);
    r.check(s, "3F2[1/2,1,5/4; 3/2,7/4; 1] closed form", watson, r.rhs("3f2_ccd"));
    r.check(s, "second half as a 3F2", r.closed("sqrt(pi)/8") * r.s_odd,
            r.closed("Gamma(1/4)^2/(24*sqrt(2*pi))") * ccd);
    r.check(s, "rewritten first integral", -r.integral("after_change"),
            r.closed("-pi^(3/2)*(pi + 2*ln2 - 8)/(4*sqrt(2)*Gamma(1/4)^2)") +
                r.closed("Gamma(1/4)^2/(24*sqrt(2*pi))") * watson);
    r.check(s, "split integral less the heavy part", r.integral("split_total") + r.integral("heavy") * 2L,
            r.closed("Gamma(1/4)^2/(8*sqrt(2*pi)) - pi^(3/2)*(pi + ln2 - 4)/(2*sqrt(2)*Gamma(1/4)^2)"));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(10, "x", "Cauchy product coefficients", "Using an appropriate Cauchy product");
    Real worst(0, r.bits());
    for (long n = 0; n <= 40; ++n) {
      const Rational d = abs(cauchy_coefficient_product(n) - cauchy_coefficient_formula(n));
      worst = max(worst, Real(d, r.bits()));
    }
    r.check(s, "coefficients n <= 40 (worst difference)", worst, Real(0, r.bits()));
    Rational paired;
    for (long m = 0; m <= 20; ++m) paired += abs(cauchy_coefficient_formula(2 * m + 1) + cauchy_coefficient_formula(2 * m));
    r.check(s, "c_2m+1 = -c_2m for m <= 20", Real(paired, r.bits()), Real(0, r.bits()));
    Rational partial;
    Rational u_n(1);
    for (long n = 0; n < 240; ++n) {
      partial += cauchy_coefficient_formula(n) * u_n;
      u_n *= Rational(1, 3);
    }
    r.check(s, "Maclaurin series at u = 1/3", Real(partial, r.bits()), r.closed("1/((4/3)*sqrt(8/9))"));
    r.check(s, "change of variables in the heavy integral", r.integral("heavy"), r.integral("heavy_u"));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(11, "xi", "digamma moment formula", "standard moment formula for the digamma");
    for (long n = 0; n <= 10; ++n) {
      const Real finite = log_moment(n, r.ctx());
      r.check(s, "moment n = " + std::to_string(n) + " finite vs digamma", finite, log_moment_digamma(n, r.ctx()));
      r.check(s, "moment n = " + std::to_string(n) + " finite vs quadrature", finite,
              log_moment_quadrature(n, r.ctx()));
    }
    // terms n = 2m and 2m + 1 share |c_n|, so each pair is c_2m (M_2m - M_2m+1)
    const Real paired = r.smooth(
        [](const Real& m) {
          // the two moments agree to about log2 m bits
          const mpfr_prec_t bits = m.precision() + std::max(0L, m.exponent()) + 16;
          const auto ctx = PrecisionContext::for_bits(bits);
          const Real g = euler_gamma(bits);
          const auto moment = [&](const Real& n) {
            return (digamma(n + Rational(5, 2), ctx) + g) * Rational(-2) / (n * 2L + Rational(3));
          };
          const Real mw = m.rounded(bits);
          const Real c = gamma_ratio(m, Rational(1, 2), Rational(1)) / sqrt(pi(m.precision())) * (m * 2L + Rational(1));
          return c * (moment(mw * 2L + Rational(1)) - moment(mw * 2L)).rounded(m.precision());
        },
        0);
    r.check(s, "heavy integral as the moment series", r.integral("heavy"), -paired / 4L);
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(12, "xii", "bisection and reindexing cascade through lemniscate-like constants",
                    "Applying reindexing arguments");
    r.check(s, "lemniscate constant A", r.L(1), r.rhs("lemniscate_A"));
    r.check(s, "lemniscate constant B", r.L(3), r.rhs("lemniscate_B"));
    r.check(s, "almost-poised Dixon: series", r.L(3, 2), r.rhs("almost_poised_direct"));
    r.check(s, "almost-poised Dixon: 3F2", r.L(3, 2),
            chu_almost_poised(Rational(1, 2), Rational(3, 4), Rational(3, 4), r.ctx()) / 9L);
    r.check(s, "Dixon: series", r.L(1, 2), r.rhs("dixon_lemniscate"));
    r.check(s, "Dixon: 3F2", r.L(1, 2), dixon_wellpoised(Rational(1, 2), Rational(1, 4), Rational(1, 4), r.ctx()));
    r.check(s, "O_2n/(4n+3)", r.L(3, 1, true), r.rhs("slovaca2"));
    r.check(s, "O_2n/(4n+1)", r.L(1, 1, true), r.rhs("slovaca1"));
    r.check(s, "O_2n moment series at x = 1/2", o2n_moment_series(Rational(1, 2), r.ctx()),
            o2n_moment_closed(Rational(1, 2), r.ctx()));
    r.check(s, "O_2n/(2n-1) vs E(i) by quadrature", r.L(-2, 1, true) * 2L, r.integral("e_imag"));
    r.check(s, "E(i) by the AGM", r.integral("e_imag"), ell_e(Modulus::imaginary_unit(), r.ctx()));
    r.check(s, "Catalan generating function", r.L(4) * 4L, r.num(2));
    r.check(s, "1/(2n-1) sum vanishes", r.L(-2) * 2L, r.num(0));

    const Real heavy = r.integral("heavy");
    const Real l2 = ln2(r.bits());
    const Real k13 = (Rational(13) + l2 * 12L) / 8L;
    const Real m1 = -(Rational(1) + l2 / 2L);
    const Real half1 = (Rational(1) + l2) / 2L;
    const Real tail5 = k13 * r.L(5) - r.L(5, 2) * Rational(3, 2) - r.L(5, 1, true) * Rational(3, 2);
    const Real neg = r.L(-3) * Rational(9, 8) - r.L(-1) * Rational(3, 4);
    const Real k4 = r.closed("(-Gamma(1/4)^4 - 8*pi^2*(2 + pi + ln2))/(32*sqrt(2*pi)*Gamma(1/4)^2)");

    r.check(s, "after the bisection", heavy,
            -r.L(1) / 8L + m1 * r.L(3) + r.L(3, 2) / 2L + r.L(3, 1, true) / 2L + tail5);
    r.check(s, "lemniscate A and B", heavy,
            r.closed("-Gamma(1/4)^2/(32*sqrt(2*pi))") + m1 * r.closed("sqrt(2*pi^3)/Gamma(1/4)^2") +
                r.L(3, 2) / 2L + r.L(3, 1, true) / 2L + tail5);
    r.check(s, "almost-poised and O_2n/(4n+3)", heavy,
            r.closed("-Gamma(1/4)^2/(32*sqrt(2*pi)) + (4 - pi)*Gamma(3/4)^2/(8*sqrt(2*pi))"
                     " + pi^(3/2)*(3*ln2 + 2)/(4*sqrt(2)*Gamma(1/4)^2)") +
                m1 * r.closed("sqrt(2*pi^3)/Gamma(1/4)^2") + tail5);
    const Real rest4 = half1 * r.L(1) - r.L(1, 2) / 2L + neg - r.L(-2, 1, true) - r.L(1, 1, true) / 2L;
    r.check(s, "first reindexing", heavy, k4 + (Rational(3) + l2 * 4L) / 8L * r.L(-2) * 2L + rest4);
    r.check(s, "Catalan generating function", heavy, k4 + rest4);
    r.check(s, "lemniscate A", heavy,
            k4 + half1 * r.closed("sqrt(pi)*Gamma(5/4)/Gamma(3/4)") - r.L(1, 2) / 2L + neg - r.L(-2, 1, true) -
                r.L(1, 1, true) / 2L);
    r.check(s, "Dixon", heavy,
            r.closed("(2*pi*Gamma(-1/4)*(2 + pi + ln2) + sqrt(2)*Gamma(1/4)^3*(3 - pi + 4*ln2))"
                     "/(64*sqrt(pi)*Gamma(1/4))") +
                neg - r.L(-2, 1, true) - r.L(1, 1, true) / 2L);
    r.check(s, "O_2n/(4n+1)", heavy,
            r.closed("(sqrt(2)*Gamma(1/4)^3*(3 - pi + ln2) + 2*pi*Gamma(-1/4)*(2 + pi + ln2))"
                     "/(64*sqrt(pi)*Gamma(1/4))") +
                neg - r.L(-2, 1, true));
    r.check(s, "E(i)", heavy,
            r.closed("(-48*pi^2 - 8*pi^3 - 8*pi^2*ln2 + Gamma(1/4)^4*(-1 - pi + ln2))/(32*sqrt(2*pi)*Gamma(1/4)^2)") +
                neg);
    r.check(s, "second reindexing", heavy,
            r.closed("3/8 - pi^(3/2)*(6 + pi + ln2)/(4*sqrt(2)*Gamma(1/4)^2) + Gamma(1/4)^2*(-1 - pi + ln2)/(32*sqrt(2*pi))") -
                r.L(4) * Rational(3, 4) + r.L(1) * Rational(3, 8) + r.L(3) * Rational(3, 4));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(13, "xiii", "closed forms of the integrals and the H_2k series", "we obtain the equality");
    r.check(s, "heavy integral", r.integral("heavy"), r.rhs("heavy"));
    r.check(s, "split integral", r.integral("split_total"), r.rhs("split_total"));
    r.check(s, "H_2n - H_n series", r.series("main_desired"), r.rhs("main_desired"));
    r.check(s, "H_2n - H_n from the reduced form", r.rhs("main_desired"),
            r.closed("-4/(pi*sqrt(2))") * r.rhs("split_total") +
                r.closed("4*sqrt(pi)/Gamma(1/4)^2 + Gamma(1/4)^2*ln2/(2*pi^(3/2))"));
    r.check(s, "H_2k series", r.series("from_bailey_end"), r.rhs("from_bailey_end"));
    r.check(s, "H_2k = (H_2k - H_k) + H_k", r.series("from_bailey_end"), r.series("main_desired") + r.series("tauraso"));
    return s;
  });

  out.push_back([](Replayer& r) {
    auto s = r.step(14, "xiv", "closing linear combinations", "we obtain the desired result");
    r.check(s, "2 H_2k - H_k at 1/32 by combination", r.series("from_bailey_end") * 2L - r.series("tauraso"),
            r.series("sun2"));
    r.check(s, "2 H_2k - H_k at 1/32 closed form", r.series("sun2"), r.rhs("sun2"));
    r.check(s, "2 H_2k - H_k at -1/16 by combination", r.series("alt_h2k") * 2L - r.series("alt_hk"),
            r.series("sun1"));
    r.check(s, "H_k and H_2k at -1/16 closed forms", r.rhs("alt_h2k") * 2L - r.rhs("alt_hk"), r.rhs("sun1"));
    r.check(s, "2 H_2k - H_k at -1/16 closed form", r.series("sun1"), r.rhs("sun1"));
    return s;
  });

  return out;
}

}  // namespace

ReplayReport replay_proof(int digits) {
  if (digits < 1 || digits > 30) throw DomainError("replay digits must be between 1 and 30");
  ReplayReport report;
  report.requested_digits = digits;
  report.working_digits = digits + 5;
  Replayer r(digits);
  for (const auto& run : chain()) {
    ReplayStep s = run(r);
    r.finish(s);
    const bool ok = s.pass;
    report.steps.push_back(std::move(s));
    if (!ok) {
      report.failed_step = report.steps.back().index;
      break;
    }
  }
  return report;
}

std::string replay_json(const ReplayReport& report) {
  const int shown = report.requested_digits + 2;
  nlohmann::ordered_json j;
  j["requested_digits"] = report.requested_digits;
  j["working_digits"] = report.working_digits;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : report.steps) {
    nlohmann::ordered_json js;
    js["index"] = s.index;
    js["step"] = s.numeral;
    js["title"] = s.title;
    js["anchor"] = s.anchor;
    js["structural"] = s.structural;
    js["cap"] = s.cap;
    js["tolerance"] = s.tolerance.to_string(3);
    js["residual"] = s.residual.to_string(3);
    js["pass"] = s.pass;
    js["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      js["checks"].push_back({{"label", c.label},
                              {"lhs", c.lhs.to_string(shown)},
                              {"rhs", c.rhs.to_string(shown)},
                              {"residual", c.residual.to_string(3)}});
    }
    j["steps"].push_back(std::move(js));
  }
  j["summary"]["total"] = ReplayReport::kReplaySteps;
  j["summary"]["completed"] = report.steps.size();
  j["summary"]["passed"] = report.passed();
  j["summary"]["failed_step"] = nullptr;
  if (report.failed_step) j["summary"]["failed_step"] = *report.failed_step;
  return j.dump(2);
}

}  // namespace harmsum
