#include "ramsey3/analysis.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace ramsey3 {

namespace {

int subset_cap(const Hypergraph3& g, const Limits& limits, const char* op) {
  const int cap = std::min(limits.max_n, 64);
  if (g.vertex_count() > cap) {
    throw CapExceeded(std::string(op) + ": " +
                      std::to_string(g.vertex_count()) +
                      " vertices exceed the cap of " + std::to_string(cap));
  }
  return cap;
}

std::vector<int> mask_to_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

uint64_t vertices_to_mask(const std::vector<int>& vs, int n, const char* op) {
  uint64_t mask = 0;
  for (int v : vs) {
    if (v < 0 || v >= n || v >= 64) {
      throw DomainError(std::string(op) + ": vertex out of range");
    }
    if (mask & (1ull << v)) {
      throw DomainError(std::string(op) + ": repeated vertex");
    }
    mask |= 1ull << v;
  }
  return mask;
}

// Ascending-size, then lexicographic enumeration of k-subsets of [0, n).
struct Combination {
  std::vector<int> idx;
  int n;
  Combination(int n_, int k) : idx(k), n(n_) {
    for (int i = 0; i < k; ++i) idx[i] = i;
  }
  bool valid() const { return idx.empty() ? n >= 0 : idx.back() < n; }
  bool advance() {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
      if (idx[i] < n - k + i) {
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  }
  uint64_t mask() const {
    uint64_t m = 0;
    for (int v : idx) m |= 1ull << v;
    return m;
  }
};

}  // namespace

std::optional<Partition3> is_tripartite(const Hypergraph3& g,
                                        const Limits& limits) {
  const int n = g.vertex_count();
  auto witness = [&](const std::vector<int>& part_of) {
    Partition3 p;
    for (int v = 0; v < n; ++v) p.parts[part_of[v]].push_back(v);
    return p;
  };
  if (g.edge_count() == 0) return witness(std::vector<int>(n, 0));
  subset_cap(g, limits, "is_tripartite");

  // A 3-partition splits every edge one-per-class exactly when the pair graph
  // covered by the edges is properly 3-colored, which prunes much earlier
  // than testing whole assignments.
  std::vector<uint64_t> adjacent(n, 0);
  for (const Triple& e : g.edges()) {
    adjacent[e[0]] |= (1ull << e[1]) | (1ull << e[2]);
    adjacent[e[1]] |= (1ull << e[0]) | (1ull << e[2]);
    adjacent[e[2]] |= (1ull << e[0]) | (1ull << e[1]);
  }
  std::vector<int> part_of(n, -1);
  std::array<uint64_t, 3> members{0, 0, 0};
  BudgetCounter counter(limits.budget);
  // Classes are opened in first-use order, which only skips renamings.
  auto dfs = [&](auto&& self, int v, int used) -> bool {
    if (v == n) return true;
    for (int c = 0; c < std::min(3, used + 1); ++c) {
      counter.tick();
      if (adjacent[v] & members[c]) continue;
      part_of[v] = c;
      members[c] |= 1ull << v;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
      members[c] &= ~(1ull << v);
      part_of[v] = -1;
    }
    return false;
  };
  if (!dfs(dfs, 0, 0)) return std::nullopt;
  return witness(part_of);
}

std::optional<std::vector<int>> exact_transversal(const Hypergraph3& g,
                                                  const Limits& limits) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) return std::vector<int>{};
  subset_cap(g, limits, "exact_transversal");
  const int m = g.edge_count();
  BudgetCounter counter(limits.budget);
  for (int k = 0; k <= n; ++k) {
    for (Combination c(n, k); c.valid(); ) {
      counter.tick();
      const uint64_t mask = c.mask();
      bool ok = true;
      for (int i = 0; i < m; ++i) {
        if (std::popcount(g.edge_mask(i) & mask) != 1) {
          ok = false;
          break;
        }
      }
      if (ok) return c.idx;
      if (!c.advance()) break;
    }
  }
  return std::nullopt;
}

bool is_collapsible(const Hypergraph3& g, const std::vector<int>& u) {
  const int n = g.vertex_count();
  if (n > 64) throw CapExceeded("is_collapsible: more than 64 vertices");
  const uint64_t mask = vertices_to_mask(u, n, "is_collapsible");
  const int size = std::popcount(mask);
  if (size < 2 || size >= n) return false;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (std::popcount(g.edge_mask(i) & mask) == 2) return false;
  }
  return true;
}

std::vector<std::vector<int>> collapsible_sets(const Hypergraph3& g,
                                               const Limits& limits) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  if (n < 3) return out;
  subset_cap(g, limits, "collapsible_sets");
  const int m = g.edge_count();
  BudgetCounter counter(limits.budget);
  for (int k = 2; k < n; ++k) {
    for (Combination c(n, k); c.valid(); ) {
      counter.tick();
      const uint64_t mask = c.mask();
      bool ok = true;
      for (int i = 0; i < m; ++i) {
        if (std::popcount(g.edge_mask(i) & mask) == 2) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(c.idx);
      if (!c.advance()) break;
    }
  }
  return out;
}

CollapseOutcome collapse(const Hypergraph3& g, const std::vector<int>& u) {
  if (!is_collapsible(g, u)) {
    throw DomainError("collapse: the given set is not collapsible");
  }
  const int n = g.vertex_count();
  const uint64_t mask = vertices_to_mask(u, n, "collapse");
  std::vector<int> inside = mask_to_vertices(mask);

  // Survivors compact in ascending order; the merged vertex takes the last
  // index.
  std::vector<int> new_label(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!(mask & (1ull << v))) new_label[v] = next++;
  }
  const int merged = next;

  std::set<Triple> qedges;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Triple& e = g.edges()[i];
    const int hit = std::popcount(g.edge_mask(i) & mask);
    if (hit == 0) {
      qedges.insert(
          Triple{new_label[e[0]], new_label[e[1]], new_label[e[2]]});
    } else if (hit == 1) {
      int x = -1, y = -1;
      for (int v : e) {
        if (mask & (1ull << v)) continue;
        (x < 0 ? x : y) = new_label[v];
      }
      qedges.insert(make_triple(x, y, merged));
    }
    // Edges with all three vertices inside U survive only in `inner`.
  }
  CollapseOutcome out;
  out.collapsed = inside;
  out.quotient = Hypergraph3(
      merged + 1, std::vector<Triple>(qedges.begin(), qedges.end()));
  out.inner = induced(g, inside);
  return out;
}

bool check_partition_shape(int n, const OrderedPartition& p) {
  std::vector<bool> seen(n, false);
  int covered = 0;
  for (const auto& block : p.blocks) {
    if (block.empty()) return false;
    for (int v : block) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = true;
      ++covered;
    }
  }
  return covered == n;
}

std::optional<Decomposition> decompose(const Hypergraph3& g,
                                       const OrderedPartition& partition,
                                       bool require_big_block) {
  const int n = g.vertex_count();
  if (n > 64) throw CapExceeded("decompose: more than 64 vertices");
  if (!check_partition_shape(n, partition)) {
    throw DomainError("decompose: blocks do not partition the vertex set");
  }
  const int t = static_cast<int>(partition.blocks.size());
  if (require_big_block) {
    bool big = false;
    for (const auto& b : partition.blocks) big |= b.size() >= 2;
    if (t < 2 || !big) return std::nullopt;
  }
  std::vector<uint64_t> block_mask(t, 0);
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < t; ++i) {
    for (int v : partition.blocks[i]) {
      block_mask[i] |= 1ull << v;
      block_of[v] = i;
    }
  }
  std::set<Triple> qedges;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Triple& e = g.edges()[i];
    const int b0 = block_of[e[0]], b1 = block_of[e[1]], b2 = block_of[e[2]];
    // Allowed intersection profiles are one-per-block or all-in-one-block.
    if (b0 == b1 && b1 == b2) continue;
    if (b0 == b1 || b1 == b2 || b0 == b2) return std::nullopt;
    qedges.insert(make_triple(b0, b1, b2));
  }
  Decomposition out;
  out.quotient =
      Hypergraph3(t, std::vector<Triple>(qedges.begin(), qedges.end()));
  out.parts.reserve(t);
  for (int i = 0; i < t; ++i) {
    std::vector<int> sorted_block = partition.blocks[i];
    std::sort(sorted_block.begin(), sorted_block.end());
    out.parts.push_back(induced(g, sorted_block));
  }
  return out;
}

namespace {

// Forward-coloring search state: blocks are emitted first to last.  Placing a
// block B is legal when no already-promised pair is split by B and every
// still-live edge meets B in 0 or 1 vertices; an edge meeting B in one vertex
// promises its remaining pair to some single later block.
struct ForwardSearch {
  const Hypergraph3& g;
  BudgetCounter counter;
  std::vector<std::vector<int>> blocks;

  ForwardSearch(const Hypergraph3& graph, const Limits& limits)
      : g(graph), counter(limits.budget) {}

  bool dfs(uint64_t remaining, const std::vector<uint64_t>& live_edges,
           const std::vector<std::pair<int, int>>& promised) {
    if (remaining == 0) return true;
    // Nonempty submasks of `remaining` in ascending numeric order.
    for (uint64_t b = (0 - remaining) & remaining; b != 0;
         b = (b - remaining) & remaining) {
      counter.tick();
      bool ok = true;
      std::vector<std::pair<int, int>> next_promised;
      for (const auto& [u, w] : promised) {
        const bool in_u = b & (1ull << u), in_w = b & (1ull << w);
        if (in_u != in_w) {
          ok = false;
          break;
        }
        if (!in_u) next_promised.emplace_back(u, w);
      }
      std::vector<uint64_t> next_live;
      if (ok) {
        for (uint64_t em : live_edges) {
          const int hit = std::popcount(em & b);
          if (hit >= 2) {
            ok = false;
            break;
          }
          if (hit == 0) {
            next_live.push_back(em);
            continue;
          }
          const uint64_t pair = em & ~b;
          next_promised.emplace_back(std::countr_zero(pair),
                                     63 - std::countl_zero(pair));
        }
      }
      if (ok) {
        std::sort(next_promised.begin(), next_promised.end());
        next_promised.erase(
            std::unique(next_promised.begin(), next_promised.end()),
            next_promised.end());
        blocks.push_back(mask_to_vertices(b));
        if (dfs(remaining & ~b, next_live, next_promised)) return true;
        blocks.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<OrderedPartition> forward_colorable(const Hypergraph3& g,
                                                  const Limits& limits) {
  const int n = g.vertex_count();
  if (n > limits.max_n_ordered) {
    throw CapExceeded("forward_colorable: " + std::to_string(n) +
                      " vertices exceed the ordered-partition cap of " +
                      std::to_string(limits.max_n_ordered));
  }
  ForwardSearch search(g, limits);
  std::vector<uint64_t> live;
  live.reserve(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) live.push_back(g.edge_mask(i));
  const uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  if (!search.dfs(all, live, {})) return std::nullopt;
  return OrderedPartition{search.blocks};
}

bool check_tripartite_witness(const Hypergraph3& g, const Partition3& parts) {
  const int n = g.vertex_count();
  std::vector<int> part_of(n, -1);
  for (int c = 0; c < 3; ++c) {
    for (int v : parts.parts[c]) {
      if (v < 0 || v >= n || part_of[v] != -1) return false;
      part_of[v] = c;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (part_of[v] == -1) return false;
  }
  for (const Triple& e : g.edges()) {
    int count[3] = {0, 0, 0};
    for (int v : e) ++count[part_of[v]];
    if (count[0] != 1 || count[1] != 1 || count[2] != 1) return false;
  }
  return true;
}

bool check_transversal_witness(const Hypergraph3& g,
                               const std::vector<int>& hitting) {
  const int n = g.vertex_count();
  std::vector<bool> in(n, false);
  for (int v : hitting) {
    if (v < 0 || v >= n || in[v]) return false;
    in[v] = true;
  }
  for (const Triple& e : g.edges()) {
    int hit = 0;
    for (int v : e) hit += in[v];
    if (hit != 1) return false;
  }
  return true;
}

bool check_forward_witness(const Hypergraph3& g, const OrderedPartition& p) {
  const int n = g.vertex_count();
  if (!check_partition_shape(n, p)) return false;
  std::vector<int> block_of(n, -1);
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    for (int v : p.blocks[i]) block_of[v] = static_cast<int>(i);
  }
  for (const Triple& e : g.edges()) {
    int b[3] = {block_of[e[0]], block_of[e[1]], block_of[e[2]]};
    std::sort(b, b + 3);
    // Exactly one vertex strictly earlier, the other two together later.
    if (!(b[0] < b[1] && b[1] == b[2])) return false;
  }
  return true;
}

bool check_decomposition_witness(const Hypergraph3& g,
                                 const OrderedPartition& p) {
  const int n = g.vertex_count();
  if (!check_partition_shape(n, p)) return false;
  std::vector<int> block_of(n, -1);
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    for (int v : p.blocks[i]) block_of[v] = static_cast<int>(i);
  }
  for (const Triple& e : g.edges()) {
    int b[3] = {block_of[e[0]], block_of[e[1]], block_of[e[2]]};
    std::sort(b, b + 3);
    const bool one_block = b[0] == b[2];
    const bool three_blocks = b[0] < b[1] && b[1] < b[2];
    if (!one_block && !three_blocks) return false;
  }
  return true;
}

}  // namespace ramsey3
