#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "ramsey3/hypergraph.hpp"

namespace ramsey3 {

// Exact isomorphism-class key: two hypergraphs compare equal here if and only
// if they are isomorphic (including their counts of isolated vertices).
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
  std::string hex() const;
};

// Computes the key by canonicalizing the non-isolated part (iterated degree
// refinement plus individualization backtracking with orbit pruning, taking
// the minimum edge-list encoding over the search leaves) and appending the
// total vertex count.
CanonicalKey canonical_key(const Hypergraph3& g);

}  // namespace ramsey3

template <>
struct std::hash<ramsey3::CanonicalKey> {
  size_t operator()(const ramsey3::CanonicalKey& k) const {
    return std::hash<std::string>{}(k.bytes);
  }
};
