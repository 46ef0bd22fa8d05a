#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ramsey3/colorings.hpp"
#include "ramsey3/errors.hpp"
#include "ramsey3/hypergraph.hpp"

namespace ramsey3 {

// Exact nonnegative integer of arbitrary size.
using BigNat = boost::multiprecision::cpp_int;

// tw_1(x) = x and tw_k(x) = 2^{tw_{k-1}(x)}.  Errors out (never rounds) when
// an intermediate exponent exceeds limits.max_value_bits.
BigNat tower(int k, uint64_t x, const Limits& limits = {});

// (qh)^{q^{ell-1} h^{2 ell} t}, exact; q >= 1, h >= 3, ell >= 1, t >= 1.
BigNat upper_bound_value(int q, int h, int ell, int t,
                         const Limits& limits = {});

// Outcome of the exhaustive arrowing search on K_n^(3).  The triples vector
// fixes the coloring order (ascending by largest vertex, then
// lexicographic); when arrows is false, avoiding[i] is the color of
// triples[i] in a complete pattern-free coloring.
struct ArrowsResult {
  bool arrows = false;
  int n = 0;
  int q = 0;
  std::vector<Triple> triples;
  std::vector<int> avoiding;
  uint64_t nodes_explored = 0;
  uint64_t refuted_branches = 0;  // partial colorings killed by a mono copy
};

// True iff every q-coloring of the triples of [0, n) contains a
// monochromatic copy of pattern.  Backtracking over colorings with the first
// triple's color pinned and colors introduced in first-use order; a branch
// dies as soon as some copy of the pattern becomes monochromatic.
ArrowsResult arrows(int n, const Hypergraph3& pattern, int q,
                    const Limits& limits = {});

// Re-validates a negative result: no monochromatic copy of pattern under the
// recorded avoiding coloring.
bool check_avoiding(const ArrowsResult& result, const Hypergraph3& pattern,
                    const Limits& limits = {});

// Least n <= n_cap with arrows(n, pattern, q) true, or absent.
std::optional<int> ramsey_exact(const Hypergraph3& pattern, int q, int n_cap,
                                const Limits& limits = {});

// True iff the oracle's coloring of its full domain has no monochromatic
// copy of pattern; certifies r(pattern; color_count) > domain_size.
bool verify_lower_bound(const ColoringOracle& oracle,
                        const Hypergraph3& pattern, const Limits& limits = {});

}  // namespace ramsey3
