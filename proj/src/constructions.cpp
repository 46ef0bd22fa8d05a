#include "ramsey3/constructions.hpp"

#include <algorithm>
#include <bit>

#include "ramsey3/rng.hpp"

namespace ramsey3 {

Hypergraph3 star3(int h) {
  if (h < 3) throw DomainError("star3: needs at least 3 vertices");
  std::vector<Triple> edges;
  for (int a = 1; a < h; ++a) {
    for (int b = a + 1; b < h; ++b) edges.push_back(Triple{0, a, b});
  }
  return Hypergraph3(h, std::move(edges));
}

Hypergraph3 clique3(int n) {
  if (n < 3) throw DomainError("clique3: needs at least 3 vertices");
  std::vector<Triple> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) edges.push_back(Triple{a, b, c});
    }
  }
  return Hypergraph3(n, std::move(edges));
}

Hypergraph3 fano() { return steiner_f2(3); }

Hypergraph3 fig2() {
  return Hypergraph3(5, {Triple{0, 2, 3}, Triple{1, 2, 3}, Triple{0, 2, 4},
                         Triple{1, 3, 4}, Triple{2, 3, 4}});
}

Hypergraph3 g_chain(int depth) {
  if (depth < 1) throw DomainError("g_chain: depth must be >= 1");
  Hypergraph3 g = star3(4);
  for (int step = 1; step < depth; ++step) {
    const int prev_n = g.vertex_count();
    const int n = 2 * prev_n + 1;
    std::vector<Triple> edges;
    for (const Triple& e : g.edges()) {
      edges.push_back(Triple{e[0] + 1, e[1] + 1, e[2] + 1});
      edges.push_back(Triple{e[0] + 1 + prev_n, e[1] + 1 + prev_n,
                             e[2] + 1 + prev_n});
    }
    for (int a = 1; a <= prev_n; ++a) {
      for (int b = prev_n + 1; b <= 2 * prev_n; ++b) {
        edges.push_back(Triple{0, a, b});
      }
    }
    g = Hypergraph3(n, std::move(edges));
  }
  return g;
}

Hypergraph3 steiner_f2(int m) {
  if (m < 2 || m > 20) throw DomainError("steiner_f2: m must be in [2, 20]");
  const int count = (1 << m) - 1;
  std::vector<Triple> edges;
  for (int x = 1; x <= count; ++x) {
    for (int y = x + 1; y <= count; ++y) {
      const int z = x ^ y;
      if (z > y) edges.push_back(Triple{x - 1, y - 1, z - 1});
    }
  }
  return Hypergraph3(count, std::move(edges));
}

OrderedPartition steiner_forward_partition(int m) {
  if (m < 2 || m > 20) throw DomainError("steiner_f2: m must be in [2, 20]");
  OrderedPartition p;
  p.blocks.assign(m, {});
  for (int value = 1; value < (1 << m); ++value) {
    p.blocks[std::bit_width(static_cast<unsigned>(value)) - 1].push_back(
        value - 1);
  }
  return p;
}

Hypergraph3 blowup_example() {
  // u, b1, b2 = 0, 1, 2; A = {v, a1, a2, a3} = {3, 4, 5, 6}.
  std::vector<Triple> edges;
  edges.push_back(Triple{0, 1, 2});
  for (int a = 3; a <= 6; ++a) {
    edges.push_back(Triple{0, 1, a});
    edges.push_back(Triple{0, 2, a});
  }
  edges.push_back(Triple{3, 4, 5});
  edges.push_back(Triple{3, 4, 6});
  edges.push_back(Triple{3, 5, 6});
  return Hypergraph3(7, std::move(edges));
}

Hypergraph3 random_g3(int n, uint64_t p_num, uint64_t p_den, uint64_t seed) {
  if (n < 0) throw DomainError("random_g3: negative vertex count");
  if (p_den == 0 || p_num > p_den) {
    throw DomainError("random_g3: probability must be num/den with num <= den");
  }
  Rng rng(seed);
  std::vector<Triple> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (rng.below(p_den) < p_num) edges.push_back(Triple{a, b, c});
      }
    }
  }
  return Hypergraph3(n, std::move(edges));
}

namespace {

int64_t get_param(const GeneratorSpec& spec, const std::string& key,
                  std::optional<int64_t> fallback = std::nullopt) {
  if (auto it = spec.params.find(key); it != spec.params.end()) {
    return it->second;
  }
  if (fallback) return *fallback;
  throw DomainError("generator '" + spec.name + "' needs parameter '" + key +
                    "'");
}

void expect_keys(const GeneratorSpec& spec,
                 std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : spec.params) {
    (void)value;
    bool known = false;
    for (const auto a : allowed) known = known || key == a;
    if (!known) {
      throw DomainError("generator '" + spec.name +
                        "': unexpected parameter '" + key + "'");
    }
  }
}

}  // namespace

Hypergraph3 generate(const GeneratorSpec& spec) {
  if (spec.name == "star") {
    expect_keys(spec, {"h"});
    return star3(static_cast<int>(get_param(spec, "h")));
  }
  if (spec.name == "clique") {
    expect_keys(spec, {"n"});
    return clique3(static_cast<int>(get_param(spec, "n")));
  }
  if (spec.name == "fano") {
    expect_keys(spec, {});
    return fano();
  }
  if (spec.name == "fig2") {
    expect_keys(spec, {});
    return fig2();
  }
  if (spec.name == "g_chain") {
    expect_keys(spec, {"i"});
    return g_chain(static_cast<int>(get_param(spec, "i")));
  }
  if (spec.name == "steiner_f2") {
    expect_keys(spec, {"m"});
    return steiner_f2(static_cast<int>(get_param(spec, "m")));
  }
  if (spec.name == "blowup_example") {
    expect_keys(spec, {});
    return blowup_example();
  }
  if (spec.name == "random") {
    expect_keys(spec, {"n", "p_num", "p_den", "seed"});
    return random_g3(static_cast<int>(get_param(spec, "n")),
                     static_cast<uint64_t>(get_param(spec, "p_num")),
                     static_cast<uint64_t>(get_param(spec, "p_den")),
                     static_cast<uint64_t>(get_param(spec, "seed", 0)));
  }
  throw DomainError("unknown generator '" + spec.name + "'");
}

namespace {

int count_crossing(const Hypergraph3& g, uint64_t a1, uint64_t a2,
                   uint64_t a3) {
  int crossing = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    const uint64_t em = g.edge_mask(i);
    crossing += std::popcount(em & a1) == 1 && std::popcount(em & a2) == 1 &&
                std::popcount(em & a3) == 1;
  }
  return crossing;
}

}  // namespace

int edge_distribution_check(const Hypergraph3& g, int part_size, int trials,
                            uint64_t seed, const Limits& limits) {
  const int n = g.vertex_count();
  if (part_size < 1 || 3 * part_size > n) {
    throw DomainError("edge_distribution_check: parts do not fit");
  }
  if (n > 64) throw CapExceeded("edge_distribution_check: more than 64 vertices");
  int best = g.edge_count();
  if (trials > 0) {
    Rng rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int t = 0; t < trials; ++t) {
      rng.shuffle(order);
      uint64_t a[3] = {0, 0, 0};
      for (int i = 0; i < 3 * part_size; ++i) {
        a[i / part_size] |= 1ull << order[i];
      }
      best = std::min(best, count_crossing(g, a[0], a[1], a[2]));
    }
    return best;
  }
  // Exhaustive over unordered disjoint triples: parts ordered by their
  // smallest element to avoid the 3! repetition.
  BudgetCounter counter(limits.budget);
  std::vector<int> sel1, sel2, sel3;
  auto combos = [&](auto&& self, std::vector<int>& sel, uint64_t avail,
                    int from, int want, auto&& done) -> void {
    if (want == 0) {
      done();
      return;
    }
    for (int v = from; v < n; ++v) {
      if (!(avail & (1ull << v))) continue;
      sel.push_back(v);
      self(self, sel, avail, v + 1, want - 1, done);
      sel.pop_back();
    }
  };
  auto mask_of = [](const std::vector<int>& sel) {
    uint64_t m = 0;
    for (int v : sel) m |= 1ull << v;
    return m;
  };
  const uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  combos(combos, sel1, all, 0, part_size, [&] {
    const uint64_t m1 = mask_of(sel1);
    combos(combos, sel2, all & ~m1, sel1[0] + 1, part_size, [&] {
      const uint64_t m2 = mask_of(sel2);
      combos(combos, sel3, all & ~m1 & ~m2, sel2[0] + 1, part_size, [&] {
        counter.tick();
        best = std::min(best, count_crossing(g, m1, m2, mask_of(sel3)));
      });
    });
  });
  return best;
}

}  // namespace ramsey3
