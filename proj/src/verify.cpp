#include "harmsum/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <json.hpp>
#include <sstream>

#include "harmsum/elliptic.hpp"
#include "harmsum/errors.hpp"
#include "harmsum/quad.hpp"

namespace harmsum {

namespace {

using Kind = LhsDescriptor::Kind;

HarmonicTerm harm(HarmonicKind kind, long scale = 1, Rational coeff = Rational(1)) {
  return {std::move(coeff), kind, scale, 0};
}

LinearFactor lin(long slope, long offset) { return {Rational(slope), Rational(offset)}; }

LhsDescriptor series(const Rational& c, int p, std::vector<LinearFactor> den = {},
                     std::vector<HarmonicTerm> h = {}, std::vector<Rational> num = {Rational(1)}) {
  LhsDescriptor d;
  d.kind = Kind::series;
  d.series = SeriesSpec{c, p, Weight{std::move(num), std::move(den), std::move(h)}};
  return d;
}

LhsDescriptor integral(const std::string& name) {
  LhsDescriptor d;
  d.kind = Kind::integral;
  d.integral = name;
  return d;
}

LhsDescriptor pfq(std::vector<Rational> upper, std::vector<Rational> lower, const Rational& x) {
  LhsDescriptor d;
  d.kind = Kind::pfq;
  d.pfq = HypSeriesSpec{std::move(upper), std::move(lower), x};
  return d;
}

LhsDescriptor elliptic(Kind k) {
  LhsDescriptor d;
  d.kind = k;
  return d;
}

IdentityRecord record(std::string id, std::string description, std::string anchor, LhsDescriptor lhs,
                      const char* rhs, std::string rate_class, std::string method, int cap) {
  return {std::move(id), std::move(description), std::move(anchor), std::move(lhs), Expr::parse(rhs),
          std::move(rate_class), std::move(method), cap};
}

std::vector<IdentityRecord> build_catalog() {
  const Rational r32(1, 32);
  const Rational r16(1, 16);
  const Rational m16(-1, 16);
  const Rational q(1, 4);
  const Rational half(1, 2);
  const auto sun = std::vector<HarmonicTerm>{harm(HarmonicKind::H, 2, Rational(2)), harm(HarmonicKind::H, 1, Rational(-1))};
  const char* e_lemn = "Gamma(1/4)^2/(8*sqrt(pi)) + pi^(3/2)/Gamma(1/4)^2";
  const char* part_flat_closed =
      "-sqrt(2)*pi^(3/2)/Gamma(1/4)^2 - (sqrt(pi/2)/16 - ln2/(16*sqrt(2*pi)))*Gamma(1/4)^2"
      " - Gamma(1/4)^2*(4 - 2*pi + 2*ln2)/(32*sqrt(2*pi)) + pi^(3/2)*(pi + ln2)/(2*sqrt(2)*Gamma(1/4)^2)";
  std::vector<IdentityRecord> out;
  out.push_back(record("3f2_ccd", "3F2[1/2,1,5/4; 3/2,7/4; 1] by the Watson-derived closed form", "the Watson-derived",
                       pfq({half, Rational(1), Rational(5, 4)}, {Rational(3, 2), Rational(7, 4)}, Rational(1)),
                       "3 - 6*pi^3/Gamma(1/4)^4", "quadrature", "euler_integral_quadrature", kQuadratureCap));
  out.push_back(record("after_change", "integral of sqrt(u) ln(1-u)/(4 sqrt(1-u^2)) after u = 1 - x^2",
                       "the change of variables such that", integral("after_change"), part_flat_closed, "quadrature",
                       "quadrature", kQuadratureCap));
  out.push_back(record("almost_poised_direct", "sum (1/4)^n binom(2n,n)/(4n+3)^2 by the almost-poised formula",
                       "direct application of the above", series(q, 1, {lin(4, 3), lin(4, 3)}),
                       "(4 - pi)*Gamma(3/4)^2/(4*sqrt(2*pi))", "quadrature", "integral_quadrature", kQuadratureCap));
  out.push_back(record("bailey_half_2f1", "2F1[1/2,1/2; 1; 1/2] by Bailey's 1/2-argument formula",
                       "Bailey's 2F1(1/2)-formula", pfq({half, half}, {Rational(1)}, half),
                       "sqrt(pi)/Gamma(3/4)^2", "geometric", "direct", kGeometricCap));
  out.push_back(record("hk_kp1", "sum (1/32)^k binom(2k,k)^2 H_k/(k+1)", "such as the formula",
                       series(r32, 2, {lin(1, 1)}, {harm(HarmonicKind::H)}),
                       "8 - 2*Gamma(1/4)^2/pi^(3/2) - (4*pi^(3/2) + 16*sqrt(pi)*ln2)/Gamma(1/4)^2", "geometric",
                       "direct", kGeometricCap));
  out.push_back(record("catalan_gf", "sum (1/4)^n binom(2n,n)/(n+1) = 2",
                       "generating function for the sequence of Catalan numbers", series(q, 1, {lin(1, 1)}), "2",
                       "quadrature", "integral_quadrature", kQuadratureCap));
  out.push_back(record("choi_chen", "sum (1/16)^k binom(2k,k)^2 H_k/(2k-1)^2", "proved by Choi in 2014",
                       series(r16, 2, {lin(2, -1), lin(2, -1)}, {harm(HarmonicKind::H)}), "(12 - 16*ln2)/pi",
                       "positive_unit", "euler_maclaurin", kPositiveUnitCap));
  out.push_back(record("alt_hk", "sum (-1/16)^k binom(2k,k)^2 H_k", "via a linearization method",
                       series(m16, 2, {}, {harm(HarmonicKind::H)}), "Gamma(1/4)^2*(pi - 5*ln2)/(4*sqrt(2*pi^3))",
                       "alternating_unit", "alternating_acceleration", kAlternatingCap));
  out.push_back(record("alt_h2k", "sum (-1/16)^k binom(2k,k)^2 H_2k", "via a linearization method",
                       series(m16, 2, {}, {harm(HarmonicKind::H, 2)}), "Gamma(1/4)^2*(pi - 6*ln2)/(8*sqrt(2*pi^3))",
                       "alternating_unit", "alternating_acceleration", kAlternatingCap));
  out.push_back(record("dixon_lemniscate", "sum (1/4)^n binom(2n,n)/(4n+1)^2 by Dixon's formula",
                       "Dixon's formula for well-poised series", series(q, 1, {lin(4, 1), lin(4, 1)}),
                       "Gamma(5/4)^3*Gamma(3/4)/Gamma(3/2)", "quadrature", "integral_quadrature", kQuadratureCap));
  out.push_back(record("e_imag", "E(i) as the integral of sqrt(1+x^2)/sqrt(1-x^2)", "Using the moment formula",
                       integral("e_imag"), "sqrt(2)*(Gamma(1/4)^2/(8*sqrt(pi)) + pi^(3/2)/Gamma(1/4)^2)", "quadrature",
                       "quadrature", kQuadratureCap));
  out.push_back(record("e_singular", "E(1/sqrt 2) singular value", "elliptic integral singular values",
                       elliptic(Kind::elliptic_e), e_lemn, "agm", "agm", kGeometricCap));
  out.push_back(record("from_bailey_end", "sum (1/32)^k binom(2k,k)^2 H_2k", "derived from Bailey's theorem",
                       series(r32, 2, {}, {harm(HarmonicKind::H, 2)}), "(pi - 3*ln2)*Gamma(1/4)^2/(8*pi^(3/2))",
                       "geometric", "direct", kGeometricCap));
  out.push_back(record("gf_half", "sum (1/32)^n binom(2n,n)^2/(n+1) from the elliptic generating function",
                       "obtain the power series expansion", series(r32, 2, {lin(1, 1)}),
                       "8*sqrt(pi)/Gamma(1/4)^2", "geometric", "direct", kGeometricCap));
  out.push_back(record("h2k_2km1", "sum (1/32)^k binom(2k,k)^2 H_2k/(2k-1)", "highlighted as main results",
                       series(r32, 2, {lin(2, -1)}, {harm(HarmonicKind::H, 2)}),
                       "sqrt(pi)*(pi + 3*ln2 - 4)/(2*Gamma(1/4)^2) - Gamma(1/4)^2*(pi - 3*ln2 - 2)/(16*pi^(3/2))",
                       "geometric", "direct", kGeometricCap));
  out.push_back(record("h2k_kp1", "sum (1/32)^k binom(2k,k)^2 H_2k/(k+1)", "highlighted as main results",
                       series(r32, 2, {lin(1, 1)}, {harm(HarmonicKind::H, 2)}),
                       "4 - 3*Gamma(1/4)^2/(2*pi^(3/2)) - 2*sqrt(pi)*(pi + 3*ln2 - 4)/Gamma(1/4)^2", "geometric",
                       "direct", kGeometricCap));
  out.push_back(record("heavy", "integral of sqrt(1-x^2) ln x/(2-x^2)^(3/2)", "it remains to evaluate the integral in",
                       integral("heavy"),
                       "Gamma(1/4)^2*(4 - 2*pi + 2*ln2)/(64*sqrt(2*pi)) - pi^(3/2)*(pi + ln2)/(4*sqrt(2)*Gamma(1/4)^2)",
                       "quadrature", "quadrature", kQuadratureCap));
  out.push_back(record("k_singular", "K(1/sqrt 2) singular value", "elliptic integral singular values",
                       elliptic(Kind::elliptic_k), "Gamma(1/4)^2/(4*sqrt(pi))", "agm", "agm", kGeometricCap));
  out.push_back(record("lemniscate_A", "integral of 1/sqrt(1-t^4)", "classical lemniscate constants",
                       integral("lemniscate_A"), "Gamma(1/4)^2/(4*sqrt(2*pi))", "quadrature", "quadrature",
                       kQuadratureCap));
  out.push_back(record("lemniscate_B", "integral of t^2/sqrt(1-t^4)", "classical lemniscate constants",
                       integral("lemniscate_B"), "sqrt(2*pi^3)/Gamma(1/4)^2", "quadrature", "quadrature",
                       kQuadratureCap));
  out.push_back(record("lemniscate_odd_zero", "sum (1/4)^n binom(2n,n)/(2n-1) = 0", "reindexing",
                       series(q, 1, {lin(2, -1)}), "0", "quadrature", "integral_quadrature", kQuadratureCap));
  out.push_back(record("luke_3f2", "3F2[7/4,1,1; 9/4,2; 1] by the digamma reduction", "Applying an index shift",
                       pfq({Rational(7, 4), Rational(1), Rational(1)}, {Rational(9, 4), Rational(2)}, Rational(1)),
                       "(5/3)*(4 - pi/2 - ln2)", "quadrature", "euler_integral_quadrature", kQuadratureCap));
  out.push_back(record("main_desired", "sum (1/32)^n binom(2n,n)^2 (H_2n - H_n)", "we obtain the equality",
                       series(r32, 2, {}, {harm(HarmonicKind::H, 2), harm(HarmonicKind::H, 1, Rational(-1))}),
                       "(5*ln2 - pi)*Gamma(1/4)^2/(8*pi^(3/2))", "geometric", "direct", kGeometricCap));
  out.push_back(record("o2n_ei", "sum (1/4)^n binom(2n,n) O_2n/(2n-1) = E(i)", "Using the moment formula",
                       series(q, 1, {lin(2, -1)}, {harm(HarmonicKind::O, 2)}),
                       "sqrt(2)*(Gamma(1/4)^2/(8*sqrt(pi)) + pi^(3/2)/Gamma(1/4)^2)", "quadrature",
                       "integral_quadrature", kQuadratureCap));
  out.push_back(record("part_flat", "integral of sqrt((1-x^2)/(2-x^2)) ln x", "We may rewrite", integral("part_flat"),
                       part_flat_closed, "quadrature", "quadrature", kQuadratureCap));
  out.push_back(record("slovaca1", "sum (1/4)^n binom(2n,n) O_2n/(4n+1)", "included as main results",
                       series(q, 1, {lin(4, 1)}, {harm(HarmonicKind::O, 2)}),
                       "3*Gamma(1/4)^2*ln2/(16*sqrt(2*pi))", "quadrature", "integral_quadrature",
                       kQuadratureCap));
  out.push_back(record("slovaca2", "sum (1/4)^n binom(2n,n) O_2n/(4n+3)", "included as main results",
                       series(q, 1, {lin(4, 3)}, {harm(HarmonicKind::O, 2)}),
                       "pi^(3/2)*(3*ln2 + 2)/(2*sqrt(2)*Gamma(1/4)^2)", "quadrature", "integral_quadrature",
                       kQuadratureCap));
  out.push_back(record("split_total", "integral of sqrt(1-x^2)(x^2-4) ln x/(2-x^2)^(3/2)",
                       "it remains to evaluate the integral", integral("split_total"),
                       "sqrt(2)*pi^(3/2)/Gamma(1/4)^2 + (sqrt(pi/2)/16 - ln2/(16*sqrt(2*pi)))*Gamma(1/4)^2",
                       "quadrature", "quadrature", kQuadratureCap));
  out.push_back(record("sun1", "sum (-1/16)^k binom(2k,k)^2 (2H_2k - H_k)", "proof of Sun's conjectured formula",
                       series(m16, 2, {}, sun), "-ln2*Gamma(1/4)^2/(4*pi*sqrt(2*pi))", "alternating_unit",
                       "alternating_acceleration", kAlternatingCap));
  out.push_back(record("sun2", "sum (1/32)^k binom(2k,k)^2 (2H_2k - H_k)", "2 H_{2k} - H_k", series(r32, 2, {}, sun),
                       "ln2*Gamma(1/4)^2/(4*pi*sqrt(pi))", "geometric", "direct", kGeometricCap));
  out.push_back(record("tauraso", "sum (1/32)^k binom(2k,k)^2 H_k", "setting a = 1/2 in",
                       series(r32, 2, {}, {harm(HarmonicKind::H)}), "sqrt(pi)*(pi - 4*ln2)/(2*Gamma(3/4)^2)",
                       "geometric", "direct", kGeometricCap));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string rational_poly(const std::vector<Rational>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c[i].to_string();
    if (i >= 1) out += "k";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

struct Evaluated {
  Real value;
  long terms = 0;
  std::string method;
  int cap = kGeometricCap;
};

Evaluated eval_lhs(const IdentityRecord& rec, const PrecisionContext& ctx, MethodChoice choice) {
  const LhsDescriptor& d = rec.lhs;
  Evaluated out;
  switch (d.kind) {
    case Kind::series: {
      const bool ok = choice == MethodChoice::automatic ||
                      (choice == MethodChoice::direct && rec.rate_class == "geometric") ||
                      (choice == MethodChoice::cvz && rec.rate_class == "alternating_unit") ||
                      (choice == MethodChoice::quadrature && rec.method == "integral_quadrature");
      if (!ok) throw DomainError("method not applicable to '" + rec.id + "'");
      const SummationOutcome s = sum_series(d.series, ctx, true);
      return {s.value, s.terms_used, std::string(method_name(s.method)), s.digit_cap};
    }
    case Kind::integral: {
      if (choice != MethodChoice::automatic && choice != MethodChoice::quadrature) {
        throw DomainError("method not applicable to '" + rec.id + "'");
      }
      QuadResult detail;
      out.value = proof_integral(d.integral, ctx, &detail);
      out.terms = detail.nodes;
      out.method = "quadrature";
      out.cap = kQuadratureCap;
      return out;
    }
    case Kind::pfq: {
      PfqMethod m = PfqMethod::automatic;
      if (choice == MethodChoice::direct) m = PfqMethod::direct;
      if (choice == MethodChoice::cvz) m = PfqMethod::alternating_acceleration;
      if (choice == MethodChoice::quadrature) m = PfqMethod::euler_integral_quadrature;
      const SummationOutcome s = pfq_eval(d.pfq, ctx, m);
      return {s.value, s.terms_used, std::string(method_name(s.method)), s.digit_cap};
    }
    case Kind::elliptic_k:
    case Kind::elliptic_e:
      if (choice != MethodChoice::automatic) throw DomainError("method not applicable to '" + rec.id + "'");
      out.value = d.kind == Kind::elliptic_k ? ell_k(Modulus::one_over_sqrt2(), ctx)
                                             : ell_e(Modulus::one_over_sqrt2(), ctx);
      out.method = "agm";
      return out;
  }
  throw DomainError("unknown lhs kind");
}

// Digit cap of the evaluation route before running it.
int route_cap(const IdentityRecord& rec, MethodChoice choice) {
  if (rec.lhs.kind == Kind::pfq && choice == MethodChoice::direct && rec.lhs.pfq.argument == Rational(1)) {
    return kUnitArgumentDirectCap;
  }
  return rec.precision_cap;
}

struct Sides {
  Real lhs;
  Real rhs;
  Evaluated detail;
};

Sides evaluate(const IdentityRecord& rec, const PrecisionContext& ctx, MethodChoice choice) {
  Evaluated e = eval_lhs(rec, ctx, choice);
  Real rhs = rec.rhs.eval(ctx);
  Real lhs = e.value;
  return {lhs, rhs, std::move(e)};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string LhsDescriptor::describe() const {
  switch (kind) {
    case Kind::series: {
      std::ostringstream os;
      os << "series sum_k (" << series.base_ratio << ")^k binom(2k,k)^" << series.binom_power;
      os << " * (" << rational_poly(series.weight.numerator) << ")";
      for (const auto& f : series.weight.denominator) {
        os << " / (" << rational_poly({f.offset, f.slope}) << ")";
      }
      if (!series.weight.harmonics.empty()) {
        os << " * [";
        bool first = true;
        for (const auto& h : series.weight.harmonics) {
          if (!first) os << " + ";
          first = false;
          os << h.coeff << "*" << harmonic_name(h.kind) << "(" << rational_poly({Rational(h.shift), Rational(h.scale)})
             << ")";
        }
        os << "]";
      }
      return os.str();
    }
    case Kind::integral:
      return "integral " + integral;
    case Kind::pfq: {
      std::ostringstream os;
      os << "pFq[";
      for (std::size_t i = 0; i < pfq.upper.size(); ++i) os << (i ? "," : "") << pfq.upper[i];
      os << "; ";
      for (std::size_t i = 0; i < pfq.lower.size(); ++i) os << (i ? "," : "") << pfq.lower[i];
      os << "; " << pfq.argument << "]";
      return os.str();
    }
    case Kind::elliptic_k:
      return "K(1/sqrt 2)";
    case Kind::elliptic_e:
      return "E(1/sqrt 2)";
  }
  return "?";
}

std::vector<std::string> LhsDescriptor::operations() const {
  switch (kind) {
    case Kind::series:
      return {"sum_series"};
    case Kind::integral:
      return {"proof_integral"};
    case Kind::pfq:
      return {"pfq_eval"};
    case Kind::elliptic_k:
      return {"ell_k"};
    case Kind::elliptic_e:
      return {"ell_e"};
  }
  return {};
}

const std::vector<std::string>& lhs_vocabulary() {
  static const std::vector<std::string> v = {"sum_series", "proof_integral", "pfq_eval", "ell_k", "ell_e"};
  return v;
}

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> c = build_catalog();
  return c;
}

const IdentityRecord& find_record(const std::string& id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return r;
  }
  throw DomainError("unknown identity id '" + id + "'");
}

MethodChoice parse_method_choice(const std::string& text) {
  if (text == "auto") return MethodChoice::automatic;
  if (text == "direct") return MethodChoice::direct;
  if (text == "cvz") return MethodChoice::cvz;
  if (text == "quadrature") return MethodChoice::quadrature;
  throw DomainError("unknown method '" + text + "' (expected auto, direct, cvz or quadrature)");
}

VerificationResult verify_one(const std::string& id, int digits, MethodChoice method) {
  if (digits < 1) throw DomainError("digits must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  const IdentityRecord& rec = find_record(id);
  VerificationResult out;
  out.id = rec.id;
  out.description = rec.description;
  out.anchor = rec.anchor;
  out.requested_digits = digits;
  out.effective_digits = std::min(digits, route_cap(rec, method));
  const int eff = out.effective_digits;
  const auto ctx = PrecisionContext::for_digits(eff);

  Sides base = evaluate(rec, ctx, method);
  out.method = base.detail.method;
  out.terms_or_nodes = base.detail.terms;
  const Sides high = evaluate(rec, ctx.elevated(64), method);

  // tie-break when |lhs - rhs| sits within two ulps of 10^-eff
  const mpfr_prec_t bits = ctx.bits();
  const Real scale = max(Real(1, bits), abs(base.rhs));
  const Real threshold = ctx.tolerance() * scale;
  const Real diff = abs(base.lhs - base.rhs);
  const Real ulp = ldexp(threshold, 1 - static_cast<long>(bits));
  if (abs(diff - threshold) <= ulp * 2L) base = evaluate(rec, ctx.elevated(128), method);

  out.digits_agreed = std::min({digits_agreed(base.lhs, base.rhs, eff), digits_agreed(base.lhs, high.lhs, eff),
                                digits_agreed(base.rhs, high.rhs, eff)});
  out.pass = out.digits_agreed >= eff;
  out.lhs = base.lhs.to_string(eff + 2);
  out.rhs = base.rhs.to_string(eff + 2);
  out.seconds = seconds_since(t0);
  return out;
}

bool matches_filter(const IdentityRecord& r, const std::string& filter) {
  if (filter.empty()) return true;
  if (filter == r.rate_class) return true;
  if (filter == "alternating" && r.rate_class == "alternating_unit") return true;
  return r.id.compare(0, filter.size(), filter) == 0;
}

namespace {

VerificationResult guarded(const IdentityRecord& rec, int digits) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    return verify_one(rec.id, digits);
  } catch (const std::exception& e) {
    VerificationResult out;
    out.id = rec.id;
    out.description = rec.description;
    out.anchor = rec.anchor;
    out.method = rec.method;
    out.requested_digits = digits;
    out.effective_digits = std::min(digits, rec.precision_cap);
    out.error = e.what();
    out.seconds = seconds_since(t0);
    return out;
  }
}

RunReport assemble(int digits, std::vector<VerificationResult> results) {
  RunReport report;
  report.requested_digits = digits;
  report.results = std::move(results);
  report.total = static_cast<int>(report.results.size());
  for (const auto& r : report.results) (r.pass ? report.passed : report.failed)++;
  return report;
}

std::vector<const IdentityRecord*> selected(const std::string& filter) {
  std::vector<const IdentityRecord*> out;
  for (const auto& r : catalog()) {
    if (matches_filter(r, filter)) out.push_back(&r);
  }
  return out;
}

}  // namespace

RunReport verify_all(int digits, const std::string& filter, int workers) {
  if (workers < 1) throw DomainError("workers must be positive");
  const auto recs = selected(filter);
  std::vector<VerificationResult> results(recs.size());
  const long n = static_cast<long>(recs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = guarded(*recs[static_cast<std::size_t>(i)], digits);
  return assemble(digits, std::move(results));
}

RunReport verify_all_serial(int digits, const std::string& filter) {
  std::vector<VerificationResult> results;
  for (const auto* r : selected(filter)) results.push_back(guarded(*r, digits));
  return assemble(digits, std::move(results));
}

namespace {

nlohmann::ordered_json to_json(const VerificationResult& r, bool with_seconds) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["description"] = r.description;
  j["paper_anchor"] = r.anchor;
  j["method"] = r.method;
  j["terms_or_nodes"] = r.terms_or_nodes;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["digits_agreed"] = r.digits_agreed;
  j["effective_digits"] = r.effective_digits;
  j["pass"] = r.pass;
  j["seconds"] = with_seconds ? r.seconds : 0.0;
  if (r.error) j["error"] = *r.error;
  return j;
}

}  // namespace

std::string result_json(const VerificationResult& result) { return to_json(result, true).dump(2); }

std::string report_json(const RunReport& report, bool with_seconds) {
  nlohmann::ordered_json j;
  j["schema_version"] = report.schema_version;
  j["requested_digits"] = report.requested_digits;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) j["results"].push_back(to_json(r, with_seconds));
  j["summary"] = {{"total", report.total}, {"passed", report.passed}, {"failed", report.failed}};
  return j.dump(2);
}

}  // namespace harmsum
