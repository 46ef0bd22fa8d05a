#include "ramsey3/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace ramsey3 {

namespace {

void append_u32(std::string& s, uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    s.push_back(static_cast<char>((v >> shift) & 0xff));
  }
}

void append_vertex(std::string& s, int v, int n) {
  if (n <= 256) {
    s.push_back(static_cast<char>(v & 0xff));
  } else {
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
  }
}

// Union-find over a fixed vertex range.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Minimum-code canonical labeling of a graph whose every vertex lies in at
// least one edge.  Search tree: iterated refinement, individualization of the
// first non-singleton cell, orbit pruning by discovered automorphisms.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Hypergraph3& g)
      : n_(g.vertex_count()), edges_(g.edges()), incident_(n_) {
    for (size_t i = 0; i < edges_.size(); ++i) {
      for (int v : edges_[i]) incident_[v].push_back(static_cast<int>(i));
    }
  }

  std::string run() {
    if (n_ == 0) return std::string();
    std::vector<int> colors = initial_colors();
    refine(colors);
    std::vector<int> prefix;
    dfs(colors, prefix);
    return best_;
  }

 private:
  std::vector<int> initial_colors() const {
    // Seed the refinement with vertex degrees.
    std::vector<int> deg(n_, 0);
    for (const Triple& e : edges_) {
      for (int v : e) ++deg[v];
    }
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] < deg[b]; });
    std::vector<int> colors(n_);
    int next = -1, prev_deg = -1;
    for (int v : order) {
      if (deg[v] != prev_deg) {
        ++next;
        prev_deg = deg[v];
      }
      colors[v] = next;
    }
    return colors;
  }

  using Sig = std::pair<int, std::vector<std::pair<int, int>>>;

  // Refines to the coarsest stable coloring; respects the incoming cell order,
  // so the result is isomorphism-invariant as an ordered partition.
  void refine(std::vector<int>& colors) const {
    for (;;) {
      int classes = *std::max_element(colors.begin(), colors.end()) + 1;
      std::vector<Sig> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].first = colors[v];
        auto& nb = sig[v].second;
        nb.reserve(incident_[v].size());
        for (int ei : incident_[v]) {
          int a = -1, b = -1;
          for (int u : edges_[ei]) {
            if (u == v) continue;
            (a < 0 ? a : b) = colors[u];
          }
          nb.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(nb.begin(), nb.end());
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return sig[a] < sig[b]; });
      int next = -1;
      const Sig* prev = nullptr;
      std::vector<int> fresh(n_);
      for (int v : order) {
        if (prev == nullptr || sig[v] != *prev) {
          ++next;
          prev = &sig[v];
        }
        fresh[v] = next;
      }
      colors.swap(fresh);
      if (next + 1 == classes) return;
    }
  }

  static std::vector<int> individualize(const std::vector<int>& colors, int v) {
    std::vector<int> out(colors.size());
    const int cv = colors[v];
    for (size_t u = 0; u < colors.size(); ++u) {
      out[u] = colors[u] + (colors[u] > cv || (colors[u] == cv && (int)u != v));
    }
    return out;
  }

  void dfs(const std::vector<int>& colors, std::vector<int>& prefix) {
    int target = -1;
    {
      std::vector<int> count(n_, 0);
      for (int c : colors) ++count[c];
      for (int c = 0; c < n_; ++c) {
        if (count[c] >= 2) {
          target = c;
          break;
        }
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (in_known_orbit(v, tried, prefix)) continue;
      tried.push_back(v);
      std::vector<int> child = individualize(colors, v);
      refine(child);
      prefix.push_back(v);
      dfs(child, prefix);
      prefix.pop_back();
    }
  }

  // True if some discovered automorphism fixing the prefix pointwise maps an
  // already-tried candidate onto v; such a branch would only repeat codes.
  bool in_known_orbit(int v, const std::vector<int>& tried,
                      const std::vector<int>& prefix) {
    if (tried.empty() || gens_.empty()) return false;
    UnionFind uf(n_);
    for (const auto& g : gens_) {
      bool fixes = true;
      for (int p : prefix) {
        if (g[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, g[x]);
    }
    for (int u : tried) {
      if (uf.find(u) == uf.find(v)) return true;
    }
    return false;
  }

  std::string encode(const std::vector<int>& label) const {
    std::vector<Triple> mapped;
    mapped.reserve(edges_.size());
    for (const Triple& e : edges_) {
      Triple t{label[e[0]], label[e[1]], label[e[2]]};
      std::sort(t.begin(), t.end());
      mapped.push_back(t);
    }
    std::sort(mapped.begin(), mapped.end());
    std::string out;
    out.reserve(mapped.size() * 3);
    for (const Triple& t : mapped) {
      for (int v : t) append_vertex(out, v, n_);
    }
    return out;
  }

  void leaf(const std::vector<int>& label) {
    std::string code = encode(label);
    if (best_.empty() && best_label_.empty()) {
      accept(std::move(code), label);
      return;
    }
    if (code < best_) {
      accept(std::move(code), label);
      return;
    }
    if (code == best_) record_automorphism(label);
  }

  void accept(std::string code, const std::vector<int>& label) {
    best_ = std::move(code);
    best_label_ = label;
    best_vertex_of_label_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) best_vertex_of_label_[label[v]] = v;
  }

  void record_automorphism(const std::vector<int>& label) {
    std::vector<int> g(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      g[v] = best_vertex_of_label_[label[v]];
      identity &= (g[v] == v);
    }
    if (identity) return;
    for (const Triple& e : edges_) {
      // Equal codes imply g maps edges to edges; keep the check as a guard.
      Triple t{g[e[0]], g[e[1]], g[e[2]]};
      std::sort(t.begin(), t.end());
      if (!std::binary_search(edges_.begin(), edges_.end(), t)) return;
    }
    for (const auto& known : gens_) {
      if (known == g) return;
    }
    gens_.push_back(std::move(g));
  }

  int n_;
  std::vector<Triple> edges_;
  std::vector<std::vector<int>> incident_;
  std::string best_;
  std::vector<int> best_label_;
  std::vector<int> best_vertex_of_label_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonicalKey canonical_key(const Hypergraph3& g) {
  std::vector<int> support;
  {
    std::vector<int> deg = g.degrees();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (deg[v] > 0) support.push_back(v);
    }
  }
  const Hypergraph3 core = induced(g, support);
  Canonicalizer canon(core);
  const std::string payload = canon.run();
  CanonicalKey key;
  append_u32(key.bytes, static_cast<uint32_t>(g.vertex_count()));
  append_u32(key.bytes, static_cast<uint32_t>(core.vertex_count()));
  append_u32(key.bytes, static_cast<uint32_t>(core.edge_count()));
  key.bytes += payload;
  return key;
}

}  // namespace ramsey3
