#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "harmsum/errors.hpp"
#include "harmsum/hyper.hpp"
#include "harmsum/replay.hpp"
#include "harmsum/verify.hpp"

using namespace harmsum;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text << '\n';
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  return out;
}

void print_result(const VerificationResult& r) {
  std::printf("%-4s %-22s %4d/%-4d %-26s %7ld  %.2fs\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.digits_agreed,
              r.effective_digits, r.method.c_str(), r.terms_or_nodes, r.seconds);
  if (r.error) std::printf("     error: %s\n", r.error->c_str());
}

int cmd_list() {
  for (const auto& r : catalog()) {
    std::printf("%-22s %-16s %-26s cap %-4d %s\n", r.id.c_str(), r.rate_class.c_str(), r.method.c_str(),
                r.precision_cap, r.description.c_str());
    std::printf("%-22s anchor: \"%s\"\n", "", r.anchor.c_str());
  }
  return 0;
}

int cmd_verify(const std::string& id, int digits, const std::string& method, const std::string& json) {
  const VerificationResult r = verify_one(id, digits, parse_method_choice(method));
  print_result(r);
  std::printf("     lhs %s\n     rhs %s\n", r.lhs.c_str(), r.rhs.c_str());
  if (!json.empty()) {
    RunReport report;
    report.requested_digits = digits;
    report.results.push_back(r);
    report.total = 1;
    (r.pass ? report.passed : report.failed) = 1;
    write_file(json, report_json(report));
  }
  return r.pass ? 0 : kExitMismatch;
}

int cmd_verify_all(int digits, const std::string& filter, int jobs, const std::string& json) {
  const RunReport report = verify_all(digits, filter, jobs);
  bool errored = false;
  for (const auto& r : report.results) {
    print_result(r);
    errored = errored || r.error.has_value();
  }
  std::printf("%d total, %d passed, %d failed\n", report.total, report.passed, report.failed);
  if (!json.empty()) write_file(json, report_json(report));
  if (errored) return kExitError;
  return report.failed == 0 ? 0 : kExitMismatch;
}

int cmd_replay(int digits, const std::string& json) {
  const ReplayReport report = replay_proof(digits);
  for (const auto& s : report.steps) {
    std::printf("%-4s (%s) %s%s  residual %s  tolerance %s\n", s.pass ? "PASS" : "FAIL", s.numeral.c_str(),
                s.title.c_str(), s.structural ? " [structural]" : "", s.residual.to_string(3).c_str(),
                s.tolerance.to_string(3).c_str());
    if (s.pass) continue;
    for (const auto& c : s.checks) {
      std::printf("     %s\n       lhs %s\n       rhs %s\n", c.label.c_str(), c.lhs.to_string(digits + 2).c_str(),
                  c.rhs.to_string(digits + 2).c_str());
    }
  }
  if (report.failed_step) std::printf("halted at step %d\n", *report.failed_step);
  if (!json.empty()) write_file(json, replay_json(report));
  return report.passed() ? 0 : kExitMismatch;
}

int cmd_eval_pfq(const std::string& upper, const std::string& lower, const std::string& arg, int digits) {
  const HypSeriesSpec spec{parse_list(upper), parse_list(lower), Rational::parse(arg)};
  const SummationOutcome s = pfq_eval(spec, PrecisionContext::for_digits(digits));
  const int shown = std::min(digits, s.digit_cap);
  std::printf("%s\n", s.value.to_string(shown).c_str());
  std::printf("method %s, terms %ld, digits %d\n", std::string(method_name(s.method)).c_str(), s.terms_used, shown);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of binomial-harmonic series identities"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "Print the identity catalog");

  std::string id;
  std::string method = "auto";
  std::string json;
  int digits = 30;
  auto* verify = app.add_subcommand("verify", "Verify one identity");
  verify->add_option("--id", id, "Identity id")->required();
  verify->add_option("--digits", digits, "Requested digits")->required()->check(CLI::Range(1, 100000));
  verify->add_option("--method", method, "auto, direct, cvz or quadrature")
      ->check(CLI::IsMember({"auto", "direct", "cvz", "quadrature"}));
  verify->add_option("--json", json, "Write the JSON report here");

  std::string filter;
  int jobs = 1;
  auto* all = app.add_subcommand("verify-all", "Verify every identity");
  all->add_option("--digits", digits, "Requested digits")->check(CLI::Range(1, 100000));
  all->add_option("--filter", filter, "Rate class or id prefix");
  all->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  all->add_option("--json", json, "Write the JSON report here");

  auto* replay = app.add_subcommand("replay", "Replay the proof chain as numeric checks");
  replay->add_option("--digits", digits, "Requested digits (at most 30)")->required()->check(CLI::Range(1, 30));
  replay->add_option("--json", json, "Write the JSON report here");

  std::string upper;
  std::string lower;
  std::string arg;
  auto* eval = app.add_subcommand("eval", "Ad-hoc evaluation");
  eval->require_subcommand(1);
  auto* pfq = eval->add_subcommand("pfq", "Generalized hypergeometric series");
  pfq->add_option("--upper", upper, "Upper parameters p/q,p/q,...")->required();
  pfq->add_option("--lower", lower, "Lower parameters p/q,...")->required();
  pfq->add_option("--arg", arg, "Argument p/q")->required();
  pfq->add_option("--digits", digits, "Requested digits")->required()->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (list->parsed()) return cmd_list();
    if (verify->parsed()) return cmd_verify(id, digits, method, json);
    if (all->parsed()) return cmd_verify_all(digits, filter, jobs, json);
    if (replay->parsed()) return cmd_replay(digits, json);
    if (pfq->parsed()) return cmd_eval_pfq(upper, lower, arg, digits);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
