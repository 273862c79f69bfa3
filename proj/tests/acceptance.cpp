#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "harmsum/elliptic.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/hyper.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/replay.hpp"
#include "harmsum/series.hpp"
#include "harmsum/special.hpp"
#include "harmsum/verify.hpp"
#include "theorem_draws.hpp"

using namespace harmsum;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Real mpfr_gamma_of(const Rational& x, mpfr_prec_t bits) {
  Real in(x, bits);
  Real out(bits);
  mpfr_gamma(out.raw(), in.raw(), MPFR_RNDN);
  return out;
}

Outcome verify_timed(const std::string& id, int digits, int want, long max_terms, const std::string& method,
                     double max_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationResult r = verify_one(id, digits);
  const double s = seconds_since(t0);
  bool ok = r.pass && r.digits_agreed >= want && s < max_seconds;
  if (max_terms > 0) ok = ok && r.terms_or_nodes <= max_terms;
  if (!method.empty()) ok = ok && r.method == method;
  return {ok, fmt("%s %d/%d digits, %s, %ld terms, %.2f s", id.c_str(), r.digits_agreed, want, r.method.c_str(),
                  r.terms_or_nodes, s)};
}

Outcome criterion_sun2() { return verify_timed("sun2", 50, 50, 600, "", 10.0); }

Outcome criterion_sun1() { return verify_timed("sun1", 25, 25, 0, "alternating_acceleration", 30.0); }

Outcome criterion_from_bailey_end() {
  const Outcome direct = verify_timed("from_bailey_end", 50, 50, 0, "", 1e9);
  const auto ctx = PrecisionContext::for_digits(55);
  const auto sum = [&](const char* id) { return sum_series(find_record(id).lhs.series, ctx).value; };
  const Real combo = sum("from_bailey_end") * 2L - sum("tauraso");
  const int d = digits_agreed(combo, sum("sun2"), 60);
  return {direct.pass && d >= 50, direct.detail + fmt("; 2 fbe - tauraso vs sun2 %d/50 digits", d)};
}

Outcome criterion_verify_all() {
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport report = verify_all(30);
  const double s = seconds_since(t0);
  int covered = 0;
  int covered_pass = 0;
  bool choi = false;
  std::string failed;
  for (const auto& r : report.results) {
    const std::string& rc = find_record(r.id).rate_class;
    if (rc == "geometric" || rc == "quadrature" || rc == "alternating_unit") {
      ++covered;
      if (r.pass) ++covered_pass;
    }
    if (r.id == "choi_chen") choi = r.pass && r.effective_digits == 10 && r.digits_agreed >= 10;
    if (!r.pass) failed += " " + r.id;
  }
  const bool ok = covered >= 24 && covered_pass == covered && choi && s < 300.0;
  return {ok, fmt("%d/%d geometric, quadrature and alternating records, choi_chen at cap 10 %s, %d/%d overall, "
                  "%.1f s%s%s",
                  covered_pass, covered, choi ? "passed" : "failed", report.passed, report.total, s,
                  failed.empty() ? "" : "; failed:", failed.c_str())};
}

Outcome criterion_replay() {
  const ReplayReport r = replay_proof(25);
  const Real tol = Real(1, 128) / pow(Real(10, 128), 25L);
  int below = 0;
  Real worst(0, 64);
  for (const auto& s : r.steps) {
    if (s.pass && s.residual < tol) ++below;
    if (s.residual > worst) worst = s.residual.rounded(64);
  }
  const int steps = static_cast<int>(ReplayReport::kReplaySteps);
  const bool ok = r.passed() && below == steps;
  return {ok, fmt("%d/%d steps below 1e-25, largest residual %s", below, steps, worst.to_string(3).c_str())};
}

Outcome criterion_draws() {
  bool ok = true;
  std::string detail;
  for (const auto& o : testing::theorem_draws(50, 25)) {
    ok = ok && o.admissible == 50 && o.failures == 0;
    detail += fmt("%s%s %d/%d", detail.empty() ? "" : ", ", o.theorem.c_str(), o.admissible - o.failures,
                  o.admissible);
  }
  return {ok, detail};
}

Outcome criterion_elliptic() {
  const auto ctx = PrecisionContext::for_digits(50);
  const mpfr_prec_t b = ctx.bits() + 64;
  const Real g = mpfr_gamma_of(Rational(1, 4), b);
  const Real p = pi(b);
  const Real k_closed = g * g / (Real(4, b) * sqrt(p));
  const Real e_closed = g * g / (Real(8, b) * sqrt(p)) + p * sqrt(p) / (g * g);
  const int dk = digits_agreed(ell_k(Modulus::one_over_sqrt2(), ctx), k_closed, 60);
  const int de = digits_agreed(ell_e(Modulus::one_over_sqrt2(), ctx), e_closed, 60);

  const auto ode_ctx = PrecisionContext::for_digits(60);
  const Real h = Real::parse("1e-10", ode_ctx.bits());
  const Real threshold = Real::parse("1e-20", 64);
  Real worst(0, 64);
  for (const char* k : {"0.3", "0.5", "0.7071067811865475244008443621048490392848", "0.9"}) {
    const auto r = ode_residuals(Real::parse(k, ode_ctx.bits()), h, ode_ctx);
    for (const Real& v : {abs(r.e_residual), abs(r.k_residual)}) {
      if (v > worst) worst = v.rounded(64);
    }
  }

  const auto ei_ctx = PrecisionContext::for_digits(30);
  const int di = digits_agreed(ell_e(Modulus::imaginary_unit(), ei_ctx), proof_integral("e_imag", ei_ctx), 40);
  const bool ok = dk >= 50 && de >= 50 && worst < threshold && di >= 30;
  return {ok, fmt("K(1/sqrt2) %d/50, E(1/sqrt2) %d/50 digits; largest ODE residual %s; E(i) vs quadrature %d/30 digits",
                  dk, de, worst.to_string(3).c_str(), di)};
}

Outcome criterion_properties() {
  const auto ctx = PrecisionContext::for_digits(30);
  const mpfr_prec_t b = ctx.bits();
  const Real tiny = ctx.tolerance();
  int checks = 0;
  int failures = 0;
  std::string failed;
  const auto check = [&](const char* group, bool ok) {
    ++checks;
    if (ok) return;
    ++failures;
    if (failed.find(group) == std::string::npos) failed += std::string(" ") + group;
  };

  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(1, 5000);
  std::uniform_int_distribution<long> den(2, 101);
  for (int i = 0; i < 100; ++i) {
    Rational x(num(rng), den(rng));
    if (x >= Rational(50)) x = x - Rational(Integer(floor(x / Rational(50)) * 50));
    if (x.is_zero()) continue;
    check("gamma", digits_agreed(gamma(x + Rational(1), ctx), gamma(x, ctx) * x, 30) >= 30);
  }
  std::uniform_int_distribution<long> frac(1, 996);
  for (int i = 0; i < 50; ++i) {
    Rational x(frac(rng), 997);
    const Real v = gamma(x, ctx) * gamma(Rational(1) - x, ctx) * sin_pi(Real(x, b)) / pi(b);
    check("reflection", digits_agreed(v, Real(1, b), 30) >= 30);
  }
  for (int i = 0; i < 50; ++i) {
    Rational x(num(rng), den(rng));
    const Real r = digamma(x + Rational(1), ctx) - digamma(x, ctx) - Real(Rational(1) / x, b);
    check("digamma", abs(r) < tiny);
  }
  for (int i = 0; i < 50; ++i) {
    Rational x(num(rng) % 300 + 1, den(rng));
    Rational y(num(rng) % 300 + 1, den(rng));
    check("beta", digits_agreed(beta(x, y, ctx) * gamma(x + y, ctx), gamma(x, ctx) * gamma(y, ctx), 30) >= 30);
  }

  for (long n = 1; n <= 60; ++n) {
    const Rational h2n = harmonic(HarmonicKind::H, 2 * n);
    const Rational hn = harmonic(HarmonicKind::H, n);
    check("harmonic", harmonic(HarmonicKind::H_alt, 2 * n) == h2n - hn);
    check("harmonic", harmonic(HarmonicKind::O, n) == h2n - hn / Rational(2));
    check("harmonic", harmonic(HarmonicKind::H, n) - harmonic(HarmonicKind::H, n - 1) == Rational(1, n));
    check("harmonic", harmonic(HarmonicKind::O2, n) - harmonic(HarmonicKind::O2, n - 1) ==
                          Rational(1, (2 * n - 1) * (2 * n - 1)));
  }

  for (const char* id : {"sun2", "from_bailey_end", "tauraso", "hk_kp1"}) {
    check("bisection", bisect_residual(find_record(id).lhs.series, ctx) < tiny);
  }
  const auto term = [](const Real& n) {
    const auto c = PrecisionContext::for_bits(n.precision() + std::max<long>(0, n.exponent()) + 16);
    const Real h = n.rounded(c.bits()) / 2L;
    Real v = exp(log_gamma(h + Rational(3, 4), c) - log_gamma(h + Rational(5, 4), c)) / n;
    return v.rounded(n.precision());
  };
  check("bisection", bisect_residual(term, 1, ctx) < tiny);

  for (long n = 0; n <= 40; ++n) check("cauchy", cauchy_coefficient_product(n) == cauchy_coefficient_formula(n));

  for (long n = 0; n <= 10; ++n) {
    const Real closed = log_moment(n, ctx);
    const Real psi = log_moment_digamma(n, ctx);
    const Real quad = log_moment_quadrature(n, ctx);
    check("log_moment", digits_agreed(closed, psi, 30) >= 30);
    check("log_moment", digits_agreed(closed, quad, 30) >= 30);
    check("log_moment", digits_agreed(psi, quad, 30) >= 30);
  }
  return {failures == 0, fmt("%d/%d checks%s%s", checks - failures, checks, failed.empty() ? "" : "; failed:",
                             failed.c_str())};
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"sun2 at 50 digits within 600 terms and 10 s", criterion_sun2},
      {"sun1 at 25 digits by alternating acceleration within 30 s", criterion_sun1},
      {"from_bailey_end at 50 digits and 2 fbe - tauraso = sun2", criterion_from_bailey_end},
      {"verify-all at 30 digits within 5 min", criterion_verify_all},
      {"replay at 25 digits, 14 steps below 1e-25", criterion_replay},
      {"summation theorems on 50 random draws each at 25 digits", criterion_draws},
      {"elliptic singular values, derivative identities and E(i)", criterion_elliptic},
      {"property suites at 30 digits", criterion_properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s [%d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", index, c.title, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
