#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey3/errors.hpp"

namespace ramsey3 {

// One reproduced fact: what was expected, what the engines observed, and the
// witness data (certificate, partition, ...) that re-validates the
// observation.
struct SuiteCase {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  nlohmann::json detail;
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  uint64_t budget = 0;
  std::vector<SuiteCase> cases;
  bool all_pass = true;
};

// Reruns the documented test vectors end to end: structural facts about the
// named example graphs, their collapse levels and closure membership (with
// certificate re-validation), the bit-toolkit spot values, and the generator
// output.  Failures become report entries, never exceptions.
SuiteReport run_paper_suite(const Limits& limits = {});

// Samples graphs from the binomial model on n vertices with edge probability
// c_num/n^2 (clamped to 1), classifies each, and reports the fraction with no
// finite collapse level.  Every produced certificate is re-validated; the
// fraction itself is reported, not asserted.
SuiteReport random_classification_experiment(int n, int c_num, int samples,
                                             uint64_t seed,
                                             const Limits& limits = {});

nlohmann::json suite_json(const SuiteReport& report);

}  // namespace ramsey3
