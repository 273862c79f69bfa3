#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmsum/expr.hpp"
#include "harmsum/hyper.hpp"
#include "harmsum/series.hpp"

namespace harmsum {

/// How the left side of an identity is evaluated.
struct LhsDescriptor {
  enum class Kind { series, integral, pfq, elliptic_k, elliptic_e };
  Kind kind = Kind::series;
  SeriesSpec series;
  /// Catalog integrand name (Kind::integral).
  std::string integral;
  HypSeriesSpec pfq;

  /// Human-readable form, e.g. "series (1/32)^k binom(2k,k)^2 [2H(2k) - H(k)]".
  std::string describe() const;
  /// Library operations the evaluator calls.
  std::vector<std::string> operations() const;
};

struct IdentityRecord {
  std::string id;
  std::string description;
  std::string anchor;
  LhsDescriptor lhs;
  Expr rhs;
  /// geometric, alternating_unit, positive_unit, quadrature or agm.
  std::string rate_class;
  std::string method;
  int precision_cap = kGeometricCap;
};

/// Every identity, sorted by id.
const std::vector<IdentityRecord>& catalog();
/// Throws DomainError for an unknown id.
const IdentityRecord& find_record(const std::string& id);

/// Operation names an lhs descriptor may reference.
const std::vector<std::string>& lhs_vocabulary();

enum class MethodChoice { automatic, direct, cvz, quadrature };
/// "auto", "direct", "cvz", "quadrature"; DomainError otherwise.
MethodChoice parse_method_choice(const std::string& text);

struct VerificationResult {
  std::string id;
  std::string description;
  std::string anchor;
  std::string method;
  int requested_digits = 0;
  int effective_digits = 0;
  long terms_or_nodes = 0;
  std::string lhs;
  std::string rhs;
  int digits_agreed = 0;
  bool pass = false;
  double seconds = 0;
  /// Set when an evaluation threw inside verify_all.
  std::optional<std::string> error;
};

/// Evaluates both sides at min(digits, cap) digits, re-runs them 64 bits
/// higher, and re-runs 128 bits higher when the difference sits within two
/// ulps of the pass threshold. digits_agreed is the smallest agreement among
/// lhs vs rhs and each side vs its re-run.
VerificationResult verify_one(const std::string& id, int digits, MethodChoice method = MethodChoice::automatic);

struct RunReport {
  int schema_version = 1;
  int requested_digits = 0;
  std::vector<VerificationResult> results;
  int total = 0;
  int passed = 0;
  int failed = 0;
};

/// True when filter is empty, names the record's rate class ("alternating"
/// is accepted for alternating_unit), or is a prefix of its id.
bool matches_filter(const IdentityRecord& r, const std::string& filter);

/// Verifies the filtered records on `workers` OpenMP threads; failures are
/// recorded, never thrown. Results are ordered by id.
RunReport verify_all(int digits, const std::string& filter = "", int workers = 1);
RunReport verify_all_serial(int digits, const std::string& filter = "");

/// JSON text of the report; with_seconds = false zeroes the timing fields.
std::string report_json(const RunReport& report, bool with_seconds = true);
std::string result_json(const VerificationResult& result);

}  // namespace harmsum
