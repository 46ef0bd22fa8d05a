#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ramsey3/hypergraph.hpp"

namespace ramsey3 {

// Injective map pattern-vertex -> host-vertex.
struct Embedding {
  std::vector<int> to_host;
};

// Host edge test over an ascending vertex triple.
using TriplePredicate = std::function<bool(int, int, int)>;

// Membership predicate for the edges of a concrete host graph.
TriplePredicate edge_predicate(const Hypergraph3& host);

// First embedding of the pattern into the host under the predicate, searching
// pattern vertices 0,1,2,... in order with ascending host candidates, so the
// returned embedding is lexicographically least by the image sequence.
// Absence is a value (nullopt), not an error.
std::optional<Embedding> find_embedding(const Hypergraph3& pattern, int host_n,
                                        const TriplePredicate& is_edge);

}  // namespace ramsey3
