#pragma once

#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ramsey3/analysis.hpp"
#include "ramsey3/canonical.hpp"
#include "ramsey3/hypergraph.hpp"

namespace ramsey3 {

// Sentinel for "no finite level".
inline constexpr int kLevelInfinite = std::numeric_limits<int>::max();

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

// Leaf: a 3-partition splitting every edge one-per-class (level 0).
struct TripartiteNode {
  Partition3 parts;
};

// Leaf: a set meeting every edge exactly once (level 1).
struct TransversalNode {
  std::vector<int> hitting;
};

// Membership step: collapsing `collapsed` leaves a quotient certified at one
// level below this node and an induced part certified at this node's level.
struct CollapseNode {
  std::vector<int> collapsed;
  CertPtr quotient;
  CertPtr inner;
};

// Leaf: an ordered partition where every edge goes one-vertex-earlier /
// two-vertices-later (membership in the forward-colorable family).
struct ForwardNode {
  OrderedPartition blocks;
};

// Closure step: a block partition whose quotient is tripartite and whose
// blocks all belong to the closure family.
struct DecomposeNode {
  OrderedPartition blocks;
  CertPtr quotient;             // tripartite witness for the quotient
  std::vector<CertPtr> parts;   // one closure certificate per block
};

// One refuted collapse candidate: the named side of the collapse has no
// finite level, witnessed by its own exhaustion certificate.
struct ExhaustedBranch {
  std::vector<int> collapsed;
  bool quotient_failed = false;  // false: the induced part failed
  CertPtr failing;
};

// Proof of infinite level: the graph is not tripartite, has no exact
// transversal, and every collapsible set (listed exhaustively, in
// (size, lexicographic) order) has a side with no finite level.
struct ExhaustedNode {
  std::vector<ExhaustedBranch> branches;
};

// One refuted closure decomposition: either its quotient is not tripartite or
// the named block falls outside the closure family.
struct L1Branch {
  OrderedPartition blocks;
  bool quotient_not_tripartite = false;
  int failing_part = -1;
  CertPtr failing;
};

// Proof of closure non-membership: not forward-colorable, and every valid
// block decomposition with at least two blocks (listed exhaustively, in
// enumeration order) is refuted.
struct L1ExhaustedNode {
  std::vector<L1Branch> branches;
};

struct Certificate {
  std::variant<TripartiteNode, TransversalNode, CollapseNode, ForwardNode,
               DecomposeNode, ExhaustedNode, L1ExhaustedNode>
      node;
};

// Growth regime of the q-color Ramsey number.
enum class Regime { Polynomial, SingleExpZone, DoubleExp };

std::string regime_name(Regime r);
// Full bound statement for the verdict (ASCII math).
std::string bounds_note_for(Regime r, int min_ell, bool no_growth);
// Compact bound token for one-line output.
std::string bound_token(Regime r, int min_ell);

struct Verdict {
  Regime regime = Regime::Polynomial;
  int min_ell = 0;              // kLevelInfinite for DoubleExp
  CertPtr certificate;
  std::string bounds_note;
  bool no_growth = false;       // edgeless input: r(G;q) = v(G), no growth
  bool few_edges = false;       // fewer than two edges
};

// Level and closure-membership engine.  Level values are memoized across
// isomorphism classes; certificates are memoized per concrete labeled graph
// so every witness refers to the caller's own vertex names.
class Classifier {
 public:
  // Least i with the graph in family i:
  //   0  = tripartite;
  //   1  = exact transversal exists;
  //   k  = min over collapsible U of max(level(quotient)+1, level(inner));
  //   kLevelInfinite when no collapse chain grounds out.
  std::pair<int, CertPtr> min_level(const Hypergraph3& g,
                                    const Limits& limits = {});

  // Membership in the closure family: forward-colorable, or decomposable
  // (>= 2 blocks, any sizes) with tripartite quotient and all blocks members.
  std::pair<bool, CertPtr> l1_member(const Hypergraph3& g,
                                     const Limits& limits = {});

  Verdict classify(const Hypergraph3& g, const Limits& limits = {});

 private:
  int level_value(const Hypergraph3& g, const Limits& limits,
                  BudgetCounter& counter);
  CertPtr level_certificate(const Hypergraph3& g, const Limits& limits,
                            BudgetCounter& counter);
  bool l1_value(const Hypergraph3& g, const Limits& limits,
                BudgetCounter& counter);
  CertPtr l1_certificate(const Hypergraph3& g, const Limits& limits,
                         BudgetCounter& counter);

  std::unordered_map<CanonicalKey, int> level_memo_;
  std::unordered_map<std::string, CertPtr> level_cert_memo_;
  std::unordered_map<CanonicalKey, bool> l1_memo_;
  std::unordered_map<std::string, CertPtr> l1_cert_memo_;
  std::mutex mu_;
};

// Process-wide engine (shared memo tables).
Classifier& shared_classifier();

std::pair<int, CertPtr> min_level(const Hypergraph3& g,
                                  const Limits& limits = {});
std::pair<bool, CertPtr> l1_member(const Hypergraph3& g,
                                   const Limits& limits = {});
Verdict classify(const Hypergraph3& g, const Limits& limits = {});

// Re-validates a verdict from raw definitions: every leaf witness is checked
// directly, collapse steps recompute their quotients, and exhaustion nodes
// re-enumerate the candidate lists.  On failure, *diagnostic names the first
// offending node.
bool check_certificate(const Hypergraph3& g, const Verdict& claimed,
                       std::string* diagnostic = nullptr,
                       const Limits& limits = {});

// Same, for a closure-membership claim.
bool check_l1_certificate(const Hypergraph3& g, bool claimed_member,
                          const CertPtr& cert,
                          std::string* diagnostic = nullptr,
                          const Limits& limits = {});

}  // namespace ramsey3
