// Bit toolkit, the stepping-up and product colorings, random tripartite and
// rainbow colorings, oracle parsing, monochromatic-copy search, and audits.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <variant>
#include <vector>

#include "ramsey3/analysis.hpp"
#include "ramsey3/colorings.hpp"
#include "ramsey3/constructions.hpp"
#include "ramsey3/errors.hpp"
#include "ramsey3/rng.hpp"

using namespace ramsey3;

namespace {

// Ascending triple drawn without replacement from [0, bound).
std::array<uint64_t, 3> random_triple(Rng& rng, uint64_t bound) {
  std::set<uint64_t> picked;
  while (picked.size() < 3) picked.insert(rng.below(bound));
  std::array<uint64_t, 3> out{};
  std::copy(picked.begin(), picked.end(), out.begin());
  return out;
}

}  // namespace

TEST_CASE("bit extraction") {
  CHECK(bit_at(6, 1) == 1);
  CHECK(bit_at(6, 0) == 0);
  CHECK(bit_at(5, 0) == 1);
  for (int i = 0; i < 70; ++i) CHECK(bit_at(0, i) == 0);
  CHECK(bit_at(UINT64_MAX, 63) == 1);
  CHECK(bit_at(1, 64) == 0);
}

TEST_CASE("highest differing bit on the documented pairs") {
  CHECK(delta(0, 1) == 0);
  CHECK(delta(6, 7) == 0);
  CHECK(delta(3, 4) == 2);
  CHECK(delta(2, 7) == 2);
  CHECK(delta(5, 6) == 1);
  CHECK_THROWS_AS(delta(9, 9), DomainError);
}

TEST_CASE("order, distinctness, and chain properties of the bit position") {
  Rng rng(2024);
  for (int trial = 0; trial < 20000; ++trial) {
    uint64_t x = rng.next(), y = rng.next();
    if (x == y) continue;
    const int d = delta(x, y);
    CHECK(delta(y, x) == d);
    // Order is decided by the highest differing bit.
    CHECK((x < y) == (bit_at(x, d) < bit_at(y, d)));
  }
  for (int trial = 0; trial < 20000; ++trial) {
    std::set<uint64_t> s;
    while (s.size() < 3) s.insert(rng.next());
    auto it = s.begin();
    const uint64_t x = *it++, y = *it++, z = *it;
    // Consecutive deltas of an ascending triple never coincide.
    CHECK(delta(x, y) != delta(y, z));
  }
  for (int trial = 0; trial < 5000; ++trial) {
    std::set<uint64_t> s;
    const size_t len = 3 + rng.below(4);
    while (s.size() < len) s.insert(rng.next());
    const std::vector<uint64_t> chain(s.begin(), s.end());
    int best = -1;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      best = std::max(best, delta(chain[i], chain[i + 1]));
    // The endpoint delta equals the maximum consecutive delta.
    CHECK(delta(chain.front(), chain.back()) == best);
  }
}

TEST_CASE("stepping-up coloring spot values") {
  CHECK(PhiColoring(6).eval(1, 4, 6) == ColorLabel::pair(1, 1));
  CHECK(PhiColoring(4).eval(0, 1, 2) == ColorLabel::pair(0, 0));
  CHECK(PhiColoring(4).eval(0, 3, 4) == ColorLabel::pair(1, 0));
}

TEST_CASE("stepping-up coloring domain and validation") {
  CHECK(PhiColoring(4).domain_size() == 16);
  CHECK(PhiColoring(6).domain_size() == 256);
  CHECK(PhiColoring(8).domain_size() == 65536);
  CHECK(PhiColoring(10).domain_size() == (1ull << 32));
  CHECK_FALSE(PhiColoring(10).window_only());
  CHECK(PhiColoring(12).window_only());
  CHECK(PhiColoring(12).domain_size() == UINT64_MAX);

  CHECK_THROWS_AS(PhiColoring(5), DomainError);   // odd
  CHECK_THROWS_AS(PhiColoring(0), DomainError);   // not positive
  CHECK_THROWS_AS(PhiColoring(4).eval(2, 1, 3), DomainError);  // not ascending
  CHECK_THROWS_AS(PhiColoring(4).eval(1, 3, 16), DomainError);  // out of range
}

TEST_CASE("stepping-up colors stay within the declared palette") {
  for (const int q : {4, 6, 8}) {
    PhiColoring phi(q);
    Rng rng(100 + q);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto t = random_triple(rng, phi.domain_size());
      const ColorLabel label = phi.eval(t[0], t[1], t[2]);
      REQUIRE(label.kind == ColorLabel::Kind::Pair);
      CHECK(label.a >= 0);
      CHECK(label.a < q / 2);
      CHECK((label.b == 0 || label.b == 1));
    }
  }
}

TEST_CASE("complementing the vertex set flips the order component") {
  PhiColoring phi(6);
  Rng rng(606);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto t = random_triple(rng, 256);
    const ColorLabel direct = phi.eval(t[0], t[1], t[2]);
    const ColorLabel mirrored =
        phi.eval(255 - t[2], 255 - t[1], 255 - t[0]);
    CHECK(mirrored.a == direct.a);
    CHECK(mirrored.b == 1 - direct.b);
  }
}

TEST_CASE("product coloring case dispatch on raw vectors") {
  RainbowColoring rainbow(4);
  // Last coordinate decides; all three values distinct.
  CHECK(product_case({1, 0}, {1, 2}, {1, 3}, &rainbow) ==
        ColorLabel::base(rainbow.eval(0, 2, 3)));
  // First coordinate decides; pattern low, high, high.
  CHECK(product_case({0, 3}, {2, 1}, {2, 5}, nullptr) ==
        ColorLabel::coord(1, 0));
  // Pattern equal, equal, high.
  CHECK(product_case({2, 1}, {2, 5}, {3, 0}, nullptr) ==
        ColorLabel::coord(1, 1));
  CHECK_THROWS_AS(product_case({1, 1}, {1, 1}, {1, 1}, nullptr), DomainError);
  CHECK_THROWS_AS(product_case({2, 0}, {1, 0}, {3, 0}, nullptr), DomainError);
  // A distinct-values outcome without a base oracle is impossible to label.
  CHECK_THROWS_AS(product_case({0, 0}, {1, 0}, {2, 0}, nullptr), DomainError);
}

TEST_CASE("product coloring on encoded integers") {
  auto rainbow = std::make_shared<RainbowColoring>(4);
  ProductColoring product(rainbow, 2);
  CHECK(product.domain_size() == 16);
  CHECK(product.color_count() == rainbow->color_count() + 2 * 2);
  CHECK(product.coords(6) == std::vector<uint64_t>{1, 2});
  CHECK(product.coords(0) == std::vector<uint64_t>{0, 0});
  CHECK(product.coords(15) == std::vector<uint64_t>{3, 3});
  // (1,0)=4, (1,2)=6, (1,3)=7: second coordinate, all distinct.
  CHECK(product.eval(4, 6, 7) == ColorLabel::base(rainbow->eval(0, 2, 3)));
  // (0,0)=0, (1,0)=4, (1,1)=5: first coordinate, low-high-high.
  CHECK(product.eval(0, 4, 5) == ColorLabel::coord(1, 0));
  // (1,3)=7, (2,0)=8, (2,1)=9 -> first coordinate, equal-equal-high is
  // impossible here; (1,0),(1,1) share the first coordinate with x only when
  // x matches too, so use (1,1)=5, (1,3)=7, (2,0)=8: j=1 pattern 1,1,2.
  CHECK(product.eval(5, 7, 8) == ColorLabel::coord(1, 1));
}

TEST_CASE("every monochromatic product class under a coordinate label is "
          "forward-colorable via the coordinate partition") {
  auto rainbow = std::make_shared<RainbowColoring>(4);
  auto product = std::make_shared<ProductColoring>(rainbow, 2);
  // Center (0,0)=0, leaves (1,0)=4, (1,1)=5, (1,2)=6 give a 4-vertex star
  // whose edges all read Coord(1,0).
  const Hypergraph3 star = star3(4);
  for (const Triple& e : star.edges()) {
    const std::vector<uint64_t> hosts{0, 4, 5, 6};
    CHECK(product->eval(hosts[e[0]], hosts[e[1]], hosts[e[2]]) ==
          ColorLabel::coord(1, 0));
  }
  const auto copy =
      find_mono_copy(*product, star, std::vector<uint64_t>{0, 4, 5, 6});
  REQUIRE(copy.has_value());
  CHECK(copy->label == ColorLabel::coord(1, 0));
  const OrderedPartition partition =
      coord_partition(*product, copy->to_host, 1, 0);
  CHECK(check_forward_witness(star, partition));
}

TEST_CASE("descending blocks for the flipped coordinate label") {
  auto rainbow = std::make_shared<RainbowColoring>(4);
  ProductColoring product(rainbow, 2);
  // Leaves (1,0)..(1,2) = 4..6 with apex (2,0) = 8: pattern 1,1,2 on the
  // first coordinate gives Coord(1,1); the copy maps the star center last.
  const Hypergraph3 star = star3(4);
  // Star center must be the vertex alone in its block: host 8.
  std::vector<uint64_t> to_host{8, 4, 5, 6};
  for (const Triple& e : star.edges()) {
    std::array<uint64_t, 3> t{to_host[e[0]], to_host[e[1]], to_host[e[2]]};
    std::sort(t.begin(), t.end());
    CHECK(product.eval(t[0], t[1], t[2]) == ColorLabel::coord(1, 1));
  }
  const OrderedPartition partition = coord_partition(product, to_host, 1, 1);
  REQUIRE(partition.blocks.size() == 2);
  // Descending coordinate order puts the apex's higher value first.
  CHECK(partition.blocks[0] == std::vector<int>{0});
  CHECK(check_forward_witness(star, partition));
}

TEST_CASE("forced tiny random tripartite coloring") {
  RandomTripartiteColoring coloring(1, 3, 12345);
  CHECK(coloring.eval(0, 1, 2) == ColorLabel::index(1));
  CHECK(coloring.uncolored().empty());
  std::set<int> parts;
  for (uint64_t v = 0; v < 3; ++v) parts.insert(coloring.part(0, v));
  CHECK(parts == std::set<int>{0, 1, 2});
}

TEST_CASE("random tripartite colorings split every colored triple") {
  const auto made = make_random_tripartite(54, 16, 1);
  REQUIRE(std::holds_alternative<OraclePtr>(made));
  const auto oracle = std::get<OraclePtr>(made);
  const auto* rt =
      dynamic_cast<const RandomTripartiteColoring*>(oracle.get());
  REQUIRE(rt != nullptr);
  for (uint64_t x = 0; x < 16; ++x)
    for (uint64_t y = x + 1; y < 16; ++y)
      for (uint64_t z = y + 1; z < 16; ++z) {
        const ColorLabel label = oracle->eval(x, y, z);
        REQUIRE(label.kind == ColorLabel::Kind::Index);
        const int copy = static_cast<int>(label.a) - 1;
        // The named copy splits the triple one vertex per class.
        std::set<int> parts{rt->part(copy, x), rt->part(copy, y),
                            rt->part(copy, z)};
        CHECK(parts.size() == 3);
        // And it is the least such copy.
        for (int earlier = 0; earlier < copy; ++earlier) {
          std::set<int> p{rt->part(earlier, x), rt->part(earlier, y),
                          rt->part(earlier, z)};
          CHECK(p.size() < 3);
        }
      }
}

TEST_CASE("a single balanced partition leaves some triples uncolored") {
  const auto made = make_random_tripartite(1, 6, 7);
  REQUIRE(std::holds_alternative<TripartiteFailure>(made));
  const auto& failure = std::get<TripartiteFailure>(made);
  CHECK(failure.q == 1);
  CHECK(failure.n == 6);
  CHECK_FALSE(failure.uncolored.empty());
  // Uncolored triples are exactly those not split one-per-part.
  RandomTripartiteColoring direct(1, 6, 7);
  CHECK(direct.uncolored() == failure.uncolored);
  for (const auto& t : failure.uncolored) {
    std::set<int> parts{direct.part(0, t[0]), direct.part(0, t[1]),
                        direct.part(0, t[2])};
    CHECK(parts.size() < 3);
  }
}

TEST_CASE("rainbow colors are distinct ranks") {
  RainbowColoring tiny(3);
  CHECK(tiny.color_count() == 1);
  CHECK(tiny.eval(0, 1, 2) == ColorLabel::index(1));

  RainbowColoring four(4);
  CHECK(four.color_count() == 4);
  std::set<int64_t> seen;
  for (uint64_t x = 0; x < 4; ++x)
    for (uint64_t y = x + 1; y < 4; ++y)
      for (uint64_t z = y + 1; z < 4; ++z)
        seen.insert(four.eval(x, y, z).a);
  CHECK(seen == std::set<int64_t>{1, 2, 3, 4});

  // Ranks follow lexicographic triple order.
  RainbowColoring five(5);
  int64_t expect = 1;
  for (uint64_t x = 0; x < 5; ++x)
    for (uint64_t y = x + 1; y < 5; ++y)
      for (uint64_t z = y + 1; z < 5; ++z)
        CHECK(five.eval(x, y, z) == ColorLabel::index(expect++));
}

TEST_CASE("oracle strings parse and reconstruct") {
  for (const std::string spec :
       {"phi-q:q=6", "rainbow:N=6", "tripartite:q=54,N=16,seed=1"}) {
    const OraclePtr oracle = parse_oracle(spec);
    CHECK(oracle->describe() == spec);
  }
  const OraclePtr product = parse_oracle("product:q=2,N=4,seed=7");
  CHECK(product->domain_size() == 16);
  CHECK(product->describe() ==
        "product:q=2,base=tripartite:q=54,N=4,seed=7");

  CHECK_THROWS_AS(parse_oracle("mystery:q=2"), ParseError);
  CHECK_THROWS_AS(parse_oracle("phi-q:q=6,q=8"), ParseError);   // duplicate
  CHECK_THROWS_AS(parse_oracle("phi-q:"), ParseError);          // missing q
  CHECK_THROWS_AS(parse_oracle("phi-q:q=6,n=2"), ParseError);   // unknown key
  CHECK_THROWS_AS(parse_oracle("rainbow:N=zebra"), ParseError);
  // A partial tripartite coloring surfaces as a loud error.
  CHECK_THROWS_AS(parse_oracle("tripartite:q=1,N=6,seed=7"), DomainError);
}

TEST_CASE("monochromatic copy search on the documented cases") {
  // Any triple hosts a single edge.
  PhiColoring phi4(4);
  const Hypergraph3 edge(3, {make_triple(0, 1, 2)});
  CHECK(find_mono_copy(phi4, edge, Window{0, 16}).has_value());

  // All-distinct labels host no two-edge pattern.
  RainbowColoring rainbow(5);
  const Hypergraph3 two(5, {make_triple(0, 1, 2), make_triple(0, 3, 4)});
  CHECK_FALSE(find_mono_copy(rainbow, two, Window{0, 5}).has_value());

  // The complete 4-graph never goes monochromatic at q=4 desk scale.
  CHECK_FALSE(find_mono_copy(phi4, clique3(4), Window{0, 16}).has_value());
}

TEST_CASE("copy search validates its inputs") {
  PhiColoring phi4(4);
  CHECK_THROWS_AS(
      find_mono_copy(phi4, Hypergraph3(3, {}), Window{0, 16}),
      DomainError);  // edgeless pattern
  CHECK_THROWS_AS(find_mono_copy(phi4, clique3(4), Window{0, 20}),
                  DomainError);  // window beyond the domain
  CHECK_THROWS_AS(
      find_mono_copy(phi4, clique3(4), std::vector<uint64_t>{3, 1, 2, 5}),
      DomainError);  // hosts not ascending
  Limits tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(find_mono_copy(phi4, clique3(4), Window{0, 16}, tiny),
                  BudgetExceeded);
}

TEST_CASE("found copies re-validate against the oracle") {
  const auto made = make_random_tripartite(54, 16, 1);
  const auto oracle = std::get<OraclePtr>(made);
  const Hypergraph3 star = star3(4);
  const auto copy = find_mono_copy(*oracle, star, Window{0, 16});
  if (copy) {
    std::set<uint64_t> distinct(copy->to_host.begin(), copy->to_host.end());
    CHECK(distinct.size() == copy->to_host.size());
    for (const Triple& e : star.edges()) {
      std::array<uint64_t, 3> t{copy->to_host[e[0]], copy->to_host[e[1]],
                                copy->to_host[e[2]]};
      std::sort(t.begin(), t.end());
      CHECK(oracle->eval(t[0], t[1], t[2]) == copy->label);
    }
  }
}

TEST_CASE("desk-scale audit of the stepping-up coloring") {
  PhiColoring phi4(4);
  const AuditReport report =
      audit_coloring(phi4, Window{0, 16}, 4, "in-U");
  CHECK(report.all_pass);
  CHECK(report.subsets_checked == 560 + 1820);  // 3- and 4-subsets of 16
  CHECK_FALSE(report.patterns.empty());
  for (const AuditPattern& p : report.patterns) {
    CHECK(p.passes);
    // Reported embeddings re-validate: every pattern edge carries the label.
    for (const Triple& e : p.pattern.edges()) {
      std::array<uint64_t, 3> t{p.subset[e[0]], p.subset[e[1]],
                                p.subset[e[2]]};
      std::sort(t.begin(), t.end());
      CHECK(phi4.eval(t[0], t[1], t[2]) == p.label);
    }
  }
  // Patterns arrive sorted by key with no duplicates.
  for (size_t i = 1; i < report.patterns.size(); ++i)
    CHECK(report.patterns[i - 1].key < report.patterns[i].key);
}

TEST_CASE("audits with other predicates") {
  RainbowColoring rainbow(6);
  CHECK(audit_coloring(rainbow, Window{0, 6}, 4, "at-most-one-edge").all_pass);

  const auto oracle = std::get<OraclePtr>(make_random_tripartite(54, 16, 1));
  CHECK(audit_coloring(*oracle, Window{0, 16}, 4, "tripartite").all_pass);

  CHECK_THROWS_AS(named_predicate("half-empty"), ParseError);
}

TEST_CASE("an audit flags a failing pattern") {
  // The stepping-up classes contain 3-edge stars on 4 vertices, which have
  // no tripartition, so this predicate must report violations.
  PhiColoring phi4(4);
  const AuditReport report =
      audit_coloring(phi4, Window{0, 16}, 4, "tripartite");
  CHECK_FALSE(report.all_pass);
  bool some_failing = false;
  for (const AuditPattern& p : report.patterns)
    if (!p.passes) some_failing = true;
  CHECK(some_failing);
}
