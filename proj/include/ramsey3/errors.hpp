#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey3 {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (hypergraph files, oracle spec strings, ...).
struct ParseError : Error {
  int line = 0;
  ParseError(const std::string& what, int line_no)
      : Error("parse error, line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// Invalid argument values (vertex out of range, odd q, x == y for delta, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Input exceeds a configured size cap.  Raised before any work is done.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// An exhaustive search ran past its node budget.  Partial results are
// discarded; callers may retry with a larger budget.
struct BudgetExceeded : Error {
  uint64_t nodes = 0;
  explicit BudgetExceeded(uint64_t nodes_visited)
      : Error("search budget exceeded after " + std::to_string(nodes_visited) +
              " nodes"),
        nodes(nodes_visited) {}
};

// Size caps and search budgets shared by the exhaustive operations.
// Every cap fails loudly (CapExceeded / BudgetExceeded), never silently.
struct Limits {
  // Vertex cap for subset-enumeration ops (tripartiteness, transversals,
  // collapsible sets, classification).  Hard ceiling 64 (subsets are bitmasks).
  int max_n = 24;
  // Vertex cap for ordered-partition searches (forward colorings, the
  // decomposition closure).
  int max_n_ordered = 12;
  // Node budget for recursive searches.
  uint64_t budget = 10'000'000;
  // Bit-size ceiling for exact tower/power values.
  uint64_t max_value_bits = 1u << 26;
  // Upper cap on parallel workers.  All engines in this build are sequential,
  // so results never depend on this value.
  int threads = 1;
};

// Running node counter checked against Limits::budget.
class BudgetCounter {
 public:
  explicit BudgetCounter(uint64_t budget) : budget_(budget) {}
  void tick(uint64_t steps = 1) {
    nodes_ += steps;
    if (nodes_ > budget_) throw BudgetExceeded(nodes_);
  }
  uint64_t nodes() const { return nodes_; }

 private:
  uint64_t nodes_ = 0;
  uint64_t budget_;
};

}  // namespace ramsey3
