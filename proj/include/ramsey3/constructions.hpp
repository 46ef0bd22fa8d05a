#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ramsey3/analysis.hpp"
#include "ramsey3/errors.hpp"
#include "ramsey3/hypergraph.hpp"

namespace ramsey3 {

// All triples through vertex 0, on h >= 3 vertices.
Hypergraph3 star3(int h);

// All triples on n >= 3 vertices.
Hypergraph3 clique3(int n);

// The 7-point projective plane: every pair of vertices lies in exactly one
// of the 7 edges.
Hypergraph3 fano();

// Five vertices, edges {023, 123, 024, 134, 234}: its only collapsible set is
// {0, 1}, and collapsing it yields the complete graph on four vertices.
Hypergraph3 fig2();

// Recursive chain: depth 1 is star3(4); depth i+1 is a fresh apex x plus two
// blocks A, B each holding a depth-i copy, plus every triple {x, a, b}.
// Level grows by exactly one per step.
Hypergraph3 g_chain(int depth);

// Nonzero vectors of an m-dimensional binary space (vertex v <-> value v+1),
// with an edge for every triple xoring to zero.  A Steiner triple system.
Hypergraph3 steiner_f2(int m);

// The ordered partition of steiner_f2(m) by highest set bit of the vertex
// values; validates as a forward-coloring witness.
OrderedPartition steiner_forward_partition(int m);

// A 4-vertex star with one leaf blown up into a 4-vertex set A carrying its
// own star: vertices {u, b1, b2} + A = {v, a1, a2, a3}, 12 edges.  Level 2,
// but outside the forward-colorable closure.
Hypergraph3 blowup_example();

// Each triple of [0, n) is an edge independently with probability num/den,
// drawn in lexicographic triple order from the seeded portable generator.
Hypergraph3 random_g3(int n, uint64_t p_num, uint64_t p_den, uint64_t seed);

// Named generator with integer parameters (the CLI surface).
struct GeneratorSpec {
  std::string name;  // star | clique | fano | fig2 | g_chain | steiner_f2
                     // | blowup_example | random
  std::map<std::string, int64_t> params;
};
Hypergraph3 generate(const GeneratorSpec& spec);

// Minimum number of edges crossing one-per-part over disjoint part-size-s
// triples (A1, A2, A3).  trials > 0 samples that many random triples;
// trials == 0 enumerates all unordered disjoint triples (budget-checked).
int edge_distribution_check(const Hypergraph3& g, int part_size, int trials,
                            uint64_t seed, const Limits& limits = {});

}  // namespace ramsey3
