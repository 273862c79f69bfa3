#include <doctest.h>

#include <json.hpp>

#include "harmsum/errors.hpp"
#include "harmsum/replay.hpp"

using namespace harmsum;

TEST_CASE("replay at 25 digits") {
  const ReplayReport r = replay_proof(25);
  REQUIRE(r.steps.size() == 14);
  CHECK(r.passed());
  CHECK(!r.failed_step);
  const Real tol = Real(1, 128) / pow(Real(10, 128), 25L);
  const char* numerals[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv"};
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    CAPTURE(s.numeral);
    CHECK(s.index == static_cast<int>(i) + 1);
    CHECK(s.numeral == numerals[i]);
    CHECK(s.pass);
    CHECK(!s.checks.empty());
    CHECK(!s.anchor.empty());
    CHECK(s.residual < tol);
    CHECK(s.structural == (s.numeral == "vii"));
  }

  const auto& closing = r.steps[12];
  bool found = false;
  for (const auto& c : closing.checks) {
    if (c.label != "H_2n - H_n series") continue;
    found = true;
    CHECK(abs(c.lhs - Real::parse("0.0956498592348691103152718952555141478775", 140)) <
          Real::parse("1e-30", 140));
  }
  CHECK(found);
}

TEST_CASE("replay bounds and report") {
  CHECK_THROWS_AS(replay_proof(0), DomainError);
  CHECK_THROWS_AS(replay_proof(31), DomainError);
  const ReplayReport r = replay_proof(30);
  CHECK(r.passed());
  const auto j = nlohmann::json::parse(replay_json(r));
  CHECK(j["requested_digits"] == 30);
  CHECK(j["working_digits"] == 35);
  CHECK(j["steps"].size() == 14);
  CHECK(j["summary"]["passed"] == true);
  CHECK(j["summary"]["failed_step"].is_null());
  CHECK(j["steps"][6]["structural"] == true);
  CHECK(j["steps"][0]["checks"][0].contains("residual"));
}

TEST_CASE("replay at low precision") {
  const ReplayReport r = replay_proof(5);
  CHECK(r.passed());
}
