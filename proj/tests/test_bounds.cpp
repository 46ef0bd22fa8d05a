// Exact bound formulas, the tower function, the brute-force arrowing
// search, exact tiny Ramsey numbers, and lower-bound certification.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "ramsey3/bounds.hpp"
#include "ramsey3/colorings.hpp"
#include "ramsey3/constructions.hpp"
#include "ramsey3/errors.hpp"
#include "ramsey3/rng.hpp"

using namespace ramsey3;

namespace {

// Independent schoolbook power for the cross-check.
BigNat pow_brute(BigNat base, uint64_t exponent) {
  BigNat value = 1;
  for (uint64_t i = 0; i < exponent; ++i) value *= base;
  return value;
}

// Every 2-coloring of the 15 pairs of a 6-point set has a same-colored
// triangle; this is the independent reason the 7-point arrowing must hold.
bool every_2edge_coloring_of_k6_has_mono_triangle() {
  for (uint32_t mask = 0; mask < (1u << 15); ++mask) {
    int index[6][6] = {};
    int next = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) index[a][b] = next++;
    bool mono = false;
    for (int a = 0; a < 6 && !mono; ++a)
      for (int b = a + 1; b < 6 && !mono; ++b)
        for (int c = b + 1; c < 6 && !mono; ++c) {
          const int ab = (mask >> index[a][b]) & 1;
          const int ac = (mask >> index[a][c]) & 1;
          const int bc = (mask >> index[b][c]) & 1;
          if (ab == ac && ac == bc) mono = true;
        }
    if (!mono) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tower values") {
  CHECK(tower(1, 5) == 5);
  CHECK(tower(2, 3) == 8);
  CHECK(tower(3, 2) == 16);
  CHECK(tower(4, 2) == 65536);
  CHECK(tower(2, 0) == 1);
  CHECK(tower(1, 0) == 0);
  CHECK_THROWS_AS(tower(0, 3), DomainError);
  CHECK_THROWS_AS(tower(6, 2), CapExceeded);  // exponent needs 2^65536 bits
}

TEST_CASE("explicit upper-bound formula values") {
  CHECK(upper_bound_value(2, 4, 1, 8) == BigNat(1) << 384);  // 8^128
  CHECK(upper_bound_value(1, 3, 1, 3) == pow_brute(3, 27));
  CHECK(upper_bound_value(2, 3, 2, 6) == pow_brute(6, 972));  // exp 2*81*6
  CHECK_THROWS_AS(upper_bound_value(0, 4, 1, 1), DomainError);
  CHECK_THROWS_AS(upper_bound_value(2, 2, 1, 1), DomainError);
  CHECK_THROWS_AS(upper_bound_value(9, 9, 9, 9), CapExceeded);
}

TEST_CASE("formula agrees with independent exponentiation") {
  Rng rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const int q = 1 + static_cast<int>(rng.below(3));
    const int h = 3 + static_cast<int>(rng.below(2));
    const int ell = 1 + static_cast<int>(rng.below(2));
    const int t = 1 + static_cast<int>(rng.below(5));
    uint64_t exponent = t;
    for (int i = 0; i < ell - 1; ++i) exponent *= static_cast<uint64_t>(q);
    for (int i = 0; i < 2 * ell; ++i) exponent *= static_cast<uint64_t>(h);
    CHECK(upper_bound_value(q, h, ell, t) ==
          pow_brute(BigNat(q) * h, exponent));
  }
}

TEST_CASE("tiny arrowing facts") {
  const Hypergraph3 edge(3, {make_triple(0, 1, 2)});
  for (int q = 1; q <= 3; ++q) {
    CHECK(arrows(3, edge, q).arrows);
  }
  CHECK_FALSE(arrows(2, edge, 1).arrows);

  const ArrowsResult seven = arrows(7, star3(4), 2);
  CHECK(seven.arrows);
  CHECK(seven.nodes_explored > 0);
  // Independent forcing argument through pair colorings of a 6-point set.
  CHECK(every_2edge_coloring_of_k6_has_mono_triangle());
}

TEST_CASE("negative arrowing results carry validating colorings") {
  for (int n = 4; n <= 6; ++n) {
    const ArrowsResult result = arrows(n, star3(4), 2);
    CHECK_FALSE(result.arrows);
    CHECK(result.avoiding.size() == result.triples.size());
    CHECK(check_avoiding(result, star3(4)));
    // At most the declared number of colors, introduced in first-use order.
    int max_seen = -1;
    for (const int c : result.avoiding) {
      CHECK(c <= max_seen + 1);
      max_seen = std::max(max_seen, c);
    }
    CHECK(max_seen < 2);
  }
  // A tampered coloring fails re-validation.
  ArrowsResult bad = arrows(6, star3(4), 2);
  for (int& c : bad.avoiding) c = 0;  // all one color on 6 >= 4 vertices
  CHECK_FALSE(check_avoiding(bad, star3(4)));
}

TEST_CASE("arrowing is monotone in size and antitone in colors") {
  // Computed values around the star threshold.
  CHECK_FALSE(arrows(6, star3(4), 2).arrows);
  CHECK(arrows(7, star3(4), 2).arrows);
  CHECK(arrows(8, star3(4), 2).arrows);
  CHECK_FALSE(arrows(6, star3(4), 3).arrows);  // more colors, still avoidable

  const Hypergraph3 edge(3, {make_triple(0, 1, 2)});
  CHECK_FALSE(arrows(2, edge, 2).arrows);
  CHECK(arrows(3, edge, 2).arrows);
  CHECK(arrows(4, edge, 2).arrows);
}

TEST_CASE("exact Ramsey numbers at desk scale") {
  const Hypergraph3 edge(3, {make_triple(0, 1, 2)});
  for (int q = 1; q <= 3; ++q) {
    CHECK(ramsey_exact(edge, q, 5) == 3);
  }
  CHECK(ramsey_exact(star3(4), 1, 6) == 4);
  CHECK(ramsey_exact(star3(4), 2, 7) == 7);
  CHECK(ramsey_exact(clique3(4), 1, 5) == 4);
  CHECK_FALSE(ramsey_exact(star3(4), 2, 6).has_value());
}

TEST_CASE("edgeless patterns arrow once the vertices fit") {
  const Hypergraph3 empty4(4, {});
  CHECK_FALSE(arrows(3, empty4, 2).arrows);
  CHECK(arrows(4, empty4, 2).arrows);
  CHECK(ramsey_exact(empty4, 3, 6) == 4);
}

TEST_CASE("lower-bound certification") {
  RainbowColoring rainbow(5);
  const Hypergraph3 two(5, {make_triple(0, 1, 2), make_triple(0, 3, 4)});
  CHECK(verify_lower_bound(rainbow, two));

  PhiColoring phi4(4);
  CHECK(verify_lower_bound(phi4, clique3(4)));

  const Hypergraph3 edge(3, {make_triple(0, 1, 2)});
  CHECK_FALSE(verify_lower_bound(phi4, edge));
}

TEST_CASE("a certified lower bound rules out small exact values") {
  // No monochromatic pair-of-edges under all-distinct labels on 5 points,
  // so the 10-color Ramsey number of that pattern exceeds 5.
  RainbowColoring rainbow(5);
  const Hypergraph3 two(5, {make_triple(0, 1, 2), make_triple(0, 3, 4)});
  REQUIRE(verify_lower_bound(rainbow, two));
  CHECK_FALSE(
      ramsey_exact(two, static_cast<int>(rainbow.color_count()), 5)
          .has_value());
}

TEST_CASE("search budgets are enforced") {
  Limits tiny;
  tiny.budget = 5;
  CHECK_THROWS_AS(arrows(7, star3(4), 2, tiny), BudgetExceeded);
  Limits small;
  small.max_n = 10;
  CHECK_THROWS_AS(arrows(17, star3(4), 2, small), CapExceeded);
}
