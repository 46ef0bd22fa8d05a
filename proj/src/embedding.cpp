#include "ramsey3/embedding.hpp"

#include <algorithm>

namespace ramsey3 {

TriplePredicate edge_predicate(const Hypergraph3& host) {
  return [host](int a, int b, int c) { return host.has_edge(a, b, c); };
}

namespace {

struct Searcher {
  const Hypergraph3& pattern;
  int host_n;
  const TriplePredicate& is_edge;
  // Pattern edges become checkable once their last vertex (in search order,
  // which is the natural vertex order) is assigned.
  std::vector<std::vector<Triple>> ready_at;
  std::vector<int> image;
  std::vector<bool> used;

  Searcher(const Hypergraph3& p, int n, const TriplePredicate& pred)
      : pattern(p), host_n(n), is_edge(pred), ready_at(p.vertex_count()),
        image(p.vertex_count(), -1), used(n, false) {
    for (const Triple& e : pattern.edges()) ready_at[e[2]].push_back(e);
  }

  bool consistent(int k) const {
    for (const Triple& e : ready_at[k]) {
      int a = image[e[0]], b = image[e[1]], c = image[e[2]];
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      if (!is_edge(a, b, c)) return false;
    }
    return true;
  }

  bool dfs(int k) {
    if (k == pattern.vertex_count()) return true;
    for (int v = 0; v < host_n; ++v) {
      if (used[v]) continue;
      image[k] = v;
      used[v] = true;
      if (consistent(k) && dfs(k + 1)) return true;
      used[v] = false;
      image[k] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_embedding(const Hypergraph3& pattern, int host_n,
                                        const TriplePredicate& is_edge) {
  if (host_n < 0) throw DomainError("find_embedding: negative host size");
  if (pattern.vertex_count() > host_n) return std::nullopt;
  Searcher s(pattern, host_n, is_edge);
  if (!s.dfs(0)) return std::nullopt;
  return Embedding{s.image};
}

}  // namespace ramsey3
