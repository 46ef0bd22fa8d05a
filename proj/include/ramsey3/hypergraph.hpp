#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ramsey3/errors.hpp"

namespace ramsey3 {

// One 3-edge, stored with strictly increasing vertex indices.
using Triple = std::array<int, 3>;

// Sorts {a,b,c}; throws DomainError on a repeated vertex.
Triple make_triple(int a, int b, int c);

// A 3-uniform hypergraph on vertices 0..n-1.  Isolated vertices are allowed
// and significant (two graphs with equal edge sets but different n differ).
// Edges are kept sorted and unique; for n <= 64 each edge also carries a
// vertex bitmask so "how many vertices of e lie in U" is a single popcount.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  // Normalizes edge order within triples and across the list, drops
  // duplicates, and validates vertex ranges.
  Hypergraph3(int n, std::vector<Triple> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Triple>& edges() const { return edges_; }

  bool has_edge(int a, int b, int c) const;  // vertices in any order

  // Vertex bitmask of edge i; only valid when masks_available().
  uint64_t edge_mask(int i) const { return edge_masks_[i]; }
  bool masks_available() const { return n_ <= 64; }

  int degree(int v) const;
  std::vector<int> degrees() const;

  bool operator==(const Hypergraph3&) const = default;

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
  std::vector<uint64_t> edge_masks_;  // parallel to edges_; empty when n_ > 64
};

// Outcome of parsing hypergraph text; duplicate edge lines are legal but
// counted so callers can surface them.
struct ParseOutcome {
  Hypergraph3 graph;
  int duplicate_edges = 0;
};

// Text format, bit-exact:
//   - '#' starts a comment running to end of line;
//   - blank lines are ignored;
//   - first data line is "n m";
//   - exactly m data lines "a b c" follow (0-based vertices, any order inside
//     a line); trailing data is an error.
ParseOutcome parse_hypergraph(const std::string& text);
std::string format_hypergraph(const Hypergraph3& g,
                              const std::vector<std::string>& comments = {});

// Subgraph induced on the given vertices (duplicates rejected), relabeled
// 0..|S|-1 in ascending order of the original indices.
Hypergraph3 induced(const Hypergraph3& g, const std::vector<int>& vertices);

// Image of g under the bijection perm (perm[old] = new).
Hypergraph3 relabel(const Hypergraph3& g, const std::vector<int>& perm);

}  // namespace ramsey3
