#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ramsey3/errors.hpp"
#include "ramsey3/hypergraph.hpp"

namespace ramsey3 {

// Three disjoint vertex classes covering V; classes may be empty.
struct Partition3 {
  std::array<std::vector<int>, 3> parts;
  bool operator==(const Partition3&) const = default;
};

// Ordered list of disjoint nonempty blocks covering V.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;
  bool operator==(const OrderedPartition&) const = default;
};

// Outcome of collapsing a vertex set: `collapsed` is the set U, `quotient`
// identifies all of U with one merged vertex (assigned the largest index
// after compacting the survivors in ascending order), and `inner` is the
// subgraph induced on U.
struct CollapseOutcome {
  std::vector<int> collapsed;
  Hypergraph3 quotient;
  Hypergraph3 inner;
};

// Quotient across a block partition plus the per-block induced subgraphs.
struct Decomposition {
  Hypergraph3 quotient;
  std::vector<Hypergraph3> parts;
};

// A 3-partition where every edge meets each class exactly once, if one
// exists.  Graphs with fewer than three vertices (hence no edges) qualify.
// Pruned exhaustive search; worst case exponential, guarded by limits.
std::optional<Partition3> is_tripartite(const Hypergraph3& g,
                                        const Limits& limits = {});

// A vertex set meeting every edge in exactly one vertex, if one exists;
// returns the first hit in (size, lexicographic) subset order, so the edgeless
// graph yields the empty set.
std::optional<std::vector<int>> exact_transversal(const Hypergraph3& g,
                                                  const Limits& limits = {});

// True if 2 <= |U| < n and no edge meets U in exactly two vertices.
bool is_collapsible(const Hypergraph3& g, const std::vector<int>& u);

// All collapsible sets, in (size, lexicographic) order.
std::vector<std::vector<int>> collapsible_sets(const Hypergraph3& g,
                                               const Limits& limits = {});

// Collapses a collapsible set (throws DomainError otherwise).  The quotient's
// edges are the edges disjoint from U plus {x, y, merged} for every x, y
// outside U that form an edge with some vertex of U.
CollapseOutcome collapse(const Hypergraph3& g, const std::vector<int>& u);

// Checks the block condition (no edge meets any block in exactly two
// vertices) and builds the quotient on the blocks: {i, j, k} is a quotient
// edge when some edge has one vertex in each of blocks i, j, k.  With
// require_big_block, additionally demands >= 2 blocks and some block of size
// >= 2; without it only >= 1 block.  nullopt when the condition fails.
std::optional<Decomposition> decompose(const Hypergraph3& g,
                                       const OrderedPartition& partition,
                                       bool require_big_block);

// An ordered partition where every edge has exactly one vertex in some
// earlier block and its other two vertices together in one later block, if
// one exists.  Pruned search over ordered partitions, deterministic witness.
std::optional<OrderedPartition> forward_colorable(const Hypergraph3& g,
                                                  const Limits& limits = {});

// Straight-from-definition witness validators (no search).
bool check_tripartite_witness(const Hypergraph3& g, const Partition3& parts);
bool check_transversal_witness(const Hypergraph3& g,
                               const std::vector<int>& hitting);
bool check_forward_witness(const Hypergraph3& g, const OrderedPartition& p);
bool check_decomposition_witness(const Hypergraph3& g,
                                 const OrderedPartition& p);
// True if p is a partition of [0, n) into disjoint nonempty blocks.
bool check_partition_shape(int n, const OrderedPartition& p);

}  // namespace ramsey3
