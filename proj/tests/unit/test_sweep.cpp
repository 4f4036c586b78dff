#include <cstdlib>

#include "doctest.h"
#include "simplexpoly/errors.hpp"
#include "simplexpoly/sweep.hpp"

using namespace simplexpoly;

namespace {

const char* kSmall = R"({
  "threads": 2,
  "suites": {
    "ladder1d": {"max_n": 2, "params": {"values": ["-1/2", 0, "1/3"]}},
    "theorem1": {"max_n": 1, "params": [[0, 0, 0, 0, 0, 0], ["-1/2", "1/3", 1, 2, 0, 0]],
                 "relations": ["N01", "N10p"]},
    "connections": {"max_n": 1, "max_n_general": 1, "params": [[0, 0, 0, 0, 0, 0]], "xi": [1],
                    "targets": [[1, 0, 0, 0]]},
    "gram": {"max_n": 1, "params": [[0, 0, 0, 0, 0, 0]], "triangle_params": [[0, 0, 0, 0]]}
  }
})";

VerificationReport report(const char* relation, Status status) {
  VerificationReport r;
  r.suite = "s";
  r.relation = relation;
  r.status = status;
  return r;
}

}  // namespace

TEST_CASE("config parsing") {
  const SweepConfig c = parse_sweep_config(kSmall);
  CHECK(c.threads == 2);
  CHECK(c.suites.at("ladder1d").params.size() == 9);
  CHECK(c.suites.at("ladder1d").params[1] == Tuple{rational(-1, 2), Rational(0)});
  CHECK(c.suites.at("theorem1").params[1][1] == rational(1, 3));
  CHECK(c.suites.at("theorem1").relations->size() == 2);
  CHECK_FALSE(c.suites.at("ladder1d").relations.has_value());
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_sweep_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config("[]"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"suites": {"nope": {}}})"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"suites": {"ladder1d": {"params": [[0, 0, 0]]}}})"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"suites": {"ladder1d": {"params": [[0, -1]]}}})"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"suites": {"ladder1d": {"params": [["1/0", 0]]}}})"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"suites": {"ladder1d": {"max_n": -1}}})"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"suites": {"ladder1d": {"bogus": 1}}})"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(R"({"threads": 0, "suites": {}})"), ConfigError);
  CHECK_THROWS_AS(load_sweep_config("/nonexistent/sweep.json"), ConfigError);
  const SweepConfig c = parse_sweep_config(kSmall);
  CHECK_THROWS_AS(run_suite("pde", c, 1), ConfigError);
  CHECK_THROWS_AS(run_suite("bogus", c, 1), ConfigError);
}

TEST_CASE("small sweeps pass and are deterministic") {
  const SweepConfig c = parse_sweep_config(kSmall);
  for (const char* suite : {"ladder1d", "theorem1", "connections", "gram"}) {
    const SweepResult one = run_suite(suite, c, 1);
    const SweepResult many = run_suite(suite, c, 3);
    CHECK(one.failures() == 0);
    CHECK(one.exit_code() == 0);
    CHECK(sweep_json(one, true) == sweep_json(many, true));
  }
  const SweepResult t = run_suite("theorem1", c, 1);
  REQUIRE(t.summary.size() == 2);
  CHECK(t.summary[0].relation == "N01");
  CHECK(t.summary[1].relation == "N10p");
  CHECK(t.reports.size() == 2 * 2 * 4);
}

TEST_CASE("summary flags relations failing on every tuple") {
  const std::vector<VerificationReport> reports = {
      report("a", Status::Fail), report("a", Status::Pass), report("a", Status::Fail),
      report("b", Status::Fail), report("b", Status::Pass), report("b", Status::Pass),
      report("c", Status::Pass), report("c", Status::NotApplicable)};
  // a fails on tuples 0 and 1; b passes everywhere on tuple 1.
  const std::vector<std::size_t> tuples = {0, 0, 1, 0, 1, 1, 0, 1};
  const auto summary = summarize_reports(reports, tuples);
  REQUIRE(summary.size() == 3);
  CHECK(summary[0].erratum_candidate);
  CHECK(summary[0].fail == 2);
  CHECK_FALSE(summary[1].erratum_candidate);
  CHECK_FALSE(summary[2].erratum_candidate);
  CHECK(summary[2].not_applicable == 1);

  SweepResult r;
  r.summary = summary;
  CHECK(r.exit_code() == 2);
  r.summary.erase(r.summary.begin());
  CHECK(r.exit_code() == 1);
  r.summary.erase(r.summary.begin());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("report json schema") {
  VerificationReport r = report("N01", Status::NotApplicable);
  r.suite = "theorem1";
  r.index = {1, 0, 0};
  r.params = {rational(1, 3), Rational(0)};
  r.detail = "pole";
  CHECK(report_json(r) ==
        R"({"detail":"pole","index":[1,0,0],"params":["1/3","0"],"relation":"N01","status":"not_applicable","suite":"theorem1"})");
}

TEST_CASE("thread override from the environment") {
  ::setenv("SIMPLEXPOLY_THREADS", "3", 1);
  CHECK(resolve_threads(1) == 3);
  ::setenv("SIMPLEXPOLY_THREADS", "zero", 1);
  CHECK(resolve_threads(2) == 2);
  ::unsetenv("SIMPLEXPOLY_THREADS");
  CHECK(resolve_threads(0) == 1);
}
