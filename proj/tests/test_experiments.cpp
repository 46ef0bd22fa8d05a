// Scripted suites: the documented-vector reproduction and the random
// classification experiment, including report determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "ramsey3/experiments.hpp"

using namespace ramsey3;

TEST_CASE("the documented-vector suite passes end to end") {
  const SuiteReport report = run_paper_suite();
  CHECK(report.all_pass);
  CHECK(report.cases.size() == 26);
  for (const SuiteCase& c : report.cases) {
    INFO(c.name, ": expected ", c.expected, ", observed ", c.observed);
    CHECK(c.pass);
  }
}

TEST_CASE("suite reports are deterministic") {
  const std::string first = suite_json(run_paper_suite()).dump();
  const std::string second = suite_json(run_paper_suite()).dump();
  CHECK(first == second);
}

TEST_CASE("random experiment classifies every sample") {
  const SuiteReport report = random_classification_experiment(8, 20, 6, 42);
  CHECK(report.all_pass);
  CHECK(report.cases.size() == 7);  // six samples plus the fraction line
  const SuiteCase& fraction = report.cases.back();
  CHECK(fraction.name == "fraction-no-finite-level");

  const std::string again =
      suite_json(random_classification_experiment(8, 20, 6, 42)).dump();
  CHECK(suite_json(report).dump() == again);
}

TEST_CASE("zero edge probability means every sample is tripartite") {
  const SuiteReport report = random_classification_experiment(6, 0, 4, 1);
  CHECK(report.all_pass);
  const SuiteCase& fraction = report.cases.back();
  CHECK(fraction.observed.find("0/4") != std::string::npos);
}

TEST_CASE("a saturated probability on four vertices keeps no level finite") {
  // p = min(C, n^2)/n^2 = 1 gives the complete 4-graph every time.
  const SuiteReport report = random_classification_experiment(4, 1000, 2, 9);
  CHECK(report.all_pass);
  const SuiteCase& fraction = report.cases.back();
  CHECK(fraction.observed.find("2/2") != std::string::npos);
}
