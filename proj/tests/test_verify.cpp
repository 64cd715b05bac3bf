#include <doctest.h>

#include <string>

#include "genfrac/verify.hpp"

using namespace genfrac;

TEST_CASE("suite names round-trip") {
  for (Suite s : kAllSuites) CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("everything").has_value());
}

TEST_CASE("runs are reproducible and case draws are independent of the count") {
  const SuiteSummary a = run_suite(Suite::Shift, 99, 6);
  const SuiteSummary b = run_suite(Suite::Shift, 99, 6);
  const SuiteSummary c = run_suite(Suite::Shift, 99, 3);
  CHECK(format_summary(a) == format_summary(b));
  for (int i = 0; i < 3; ++i) {
    CHECK(a.outcomes[i].description == c.outcomes[i].description);
    CHECK(a.outcomes[i].report.lhs == c.outcomes[i].report.lhs);
  }
  CHECK(run_suite(Suite::Shift, 100, 1).outcomes[0].description != a.outcomes[0].description);
}

TEST_CASE("each suite passes on a few seeds") {
  for (Suite s : kAllSuites) {
    for (std::uint64_t seed : {3u, 17u}) {
      const SuiteSummary r = run_suite(s, seed, 8);
      CAPTURE(format_summary(r));
      for (const CaseOutcome& o : r.outcomes) {
        CAPTURE(o.description);
        CAPTURE(o.error);
        CHECK(o.report.passed);
      }
    }
  }
}

TEST_CASE("summary line format") {
  SuiteSummary s;
  s.suite = Suite::HadamardLimit;
  s.cases = 4;
  s.passed = 3;
  s.worst_rel_diff = 0.00125;
  CHECK(format_summary(s) == "hadamard-limit: 3/4 pass, worst rel_diff 0.00125");
}
