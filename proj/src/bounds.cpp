#include "ramsey3/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ramsey3 {

BigNat tower(int k, uint64_t x, const Limits& limits) {
  if (k < 1) throw DomainError("tower: height must be positive");
  BigNat value = x;
  for (int level = 1; level < k; ++level) {
    if (value > limits.max_value_bits) {
      throw CapExceeded("tower: intermediate exponent exceeds " +
                        std::to_string(limits.max_value_bits) + " bits");
    }
    value = BigNat(1) << value.convert_to<uint64_t>();
  }
  return value;
}

BigNat upper_bound_value(int q, int h, int ell, int t, const Limits& limits) {
  if (q < 1 || h < 3 || ell < 1 || t < 1) {
    throw DomainError("upper bound: needs q >= 1, h >= 3, ell >= 1, t >= 1");
  }
  using boost::multiprecision::msb;
  using boost::multiprecision::pow;
  const BigNat exponent = pow(BigNat(q), static_cast<unsigned>(ell - 1)) *
                          pow(BigNat(h), static_cast<unsigned>(2 * ell)) * t;
  const BigNat base = BigNat(q) * h;
  if (exponent * static_cast<int>(msb(base) + 1) > limits.max_value_bits) {
    throw CapExceeded("upper bound: result exceeds " +
                      std::to_string(limits.max_value_bits) + " bits");
  }
  return pow(base, exponent.convert_to<unsigned>());
}

namespace {

// All triples of [0, n), ascending by largest vertex then lexicographic, so
// the triples within [0, v] precede every triple that uses a vertex above v.
std::vector<Triple> incremental_triples(int n) {
  std::vector<Triple> triples;
  for (int c = 2; c < n; ++c) {
    for (int a = 0; a < c; ++a) {
      for (int b = a + 1; b < c; ++b) triples.push_back(Triple{a, b, c});
    }
  }
  return triples;
}

// All distinct edge images of pattern under injections into [0, n), each as
// a sorted list of triple indices.
std::vector<std::vector<int>> pattern_copies(
    const Hypergraph3& pattern, int n,
    const std::vector<Triple>& triples, BudgetCounter& counter) {
  std::map<Triple, int> index_of;
  for (size_t i = 0; i < triples.size(); ++i) {
    index_of[triples[i]] = static_cast<int>(i);
  }
  const int h = pattern.vertex_count();
  std::set<std::vector<int>> images;
  std::vector<int> map(h, -1);
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == h) {
      counter.tick();
      std::vector<int> image;
      image.reserve(pattern.edge_count());
      for (const Triple& e : pattern.edges()) {
        image.push_back(index_of.at(make_triple(map[e[0]], map[e[1]],
                                                map[e[2]])));
      }
      std::sort(image.begin(), image.end());
      images.insert(std::move(image));
      return;
    }
    for (int host = 0; host < n; ++host) {
      if (used[host]) continue;
      counter.tick();
      used[host] = true;
      map[v] = host;
      self(self, v + 1);
      used[host] = false;
    }
  };
  dfs(dfs, 0);
  return {images.begin(), images.end()};
}

}  // namespace

ArrowsResult arrows(int n, const Hypergraph3& pattern, int q,
                    const Limits& limits) {
  if (n < 0) throw DomainError("arrows: negative vertex count");
  if (q < 1) throw DomainError("arrows: need at least one color");
  if (n > 16) {
    throw CapExceeded("arrows: " + std::to_string(n) +
                      " vertices exceed the brute-force cap of 16");
  }
  ArrowsResult result;
  result.n = n;
  result.q = q;
  result.triples = incremental_triples(n);
  const int h = pattern.vertex_count();

  // A copy of an edgeless pattern is monochromatic vacuously, so the answer
  // only asks whether an injection exists.
  if (pattern.edge_count() == 0) {
    result.arrows = n >= h;
    if (!result.arrows) result.avoiding.assign(result.triples.size(), 0);
    return result;
  }
  BudgetCounter counter(limits.budget);
  std::vector<std::vector<int>> copies;
  if (n >= h) copies = pattern_copies(pattern, n, result.triples, counter);
  std::vector<std::vector<const std::vector<int>*>> by_last(
      result.triples.size());
  for (const auto& copy : copies) by_last[copy.back()].push_back(&copy);

  const int total = static_cast<int>(result.triples.size());
  std::vector<int> color(total, -1);
  auto dfs = [&](auto&& self, int i, int used_colors) -> bool {
    if (i == total) return true;  // complete coloring, no mono copy: avoiding
    const int candidates = std::min(q, used_colors + 1);
    for (int c = 0; c < candidates; ++c) {
      counter.tick();
      color[i] = c;
      bool mono = false;
      for (const auto* copy : by_last[i]) {
        bool all = true;
        for (const int t : *copy) {
          if (color[t] != c) {
            all = false;
            break;
          }
        }
        if (all) {
          mono = true;
          break;
        }
      }
      if (mono) {
        ++result.refuted_branches;
        continue;
      }
      if (self(self, i + 1, std::max(used_colors, c + 1))) return true;
    }
    color[i] = -1;
    return false;
  };
  const bool avoidable = dfs(dfs, 0, 0);
  result.nodes_explored = counter.nodes();
  result.arrows = !avoidable;
  if (avoidable) result.avoiding.assign(color.begin(), color.end());
  return result;
}

namespace {

// Replays a recorded coloring as an oracle so the mono-copy search can
// re-validate it.
class TableOracle : public ColoringOracle {
 public:
  TableOracle(int n, const std::vector<Triple>& triples,
              const std::vector<int>& colors)
      : n_(n) {
    for (size_t i = 0; i < triples.size(); ++i) {
      table_[triples[i]] = colors.at(i);
    }
  }
  uint64_t domain_size() const override { return n_; }
  uint64_t color_count() const override {
    int top = 0;
    for (const auto& [t, c] : table_) top = std::max(top, c + 1);
    return top;
  }
  ColorLabel eval(uint64_t x, uint64_t y, uint64_t z) const override {
    const auto it = table_.find(make_triple(static_cast<int>(x),
                                            static_cast<int>(y),
                                            static_cast<int>(z)));
    if (it == table_.end()) throw DomainError("table coloring: missing triple");
    return ColorLabel::index(it->second + 1);
  }
  std::string describe() const override {
    return "table:N=" + std::to_string(n_);
  }

 private:
  int n_;
  std::map<Triple, int> table_;
};

}  // namespace

bool check_avoiding(const ArrowsResult& result, const Hypergraph3& pattern,
                    const Limits& limits) {
  if (result.arrows) return false;
  if (result.avoiding.size() != result.triples.size()) return false;
  if (pattern.edge_count() == 0) return result.n < pattern.vertex_count();
  if (result.n < 3) return true;  // no triples, no copies
  const TableOracle oracle(result.n, result.triples, result.avoiding);
  return !find_mono_copy(oracle, pattern,
                         Window{0, static_cast<uint64_t>(result.n)}, limits)
              .has_value();
}

std::optional<int> ramsey_exact(const Hypergraph3& pattern, int q, int n_cap,
                                const Limits& limits) {
  for (int n = 1; n <= n_cap; ++n) {
    if (arrows(n, pattern, q, limits).arrows) return n;
  }
  return std::nullopt;
}

bool verify_lower_bound(const ColoringOracle& oracle,
                        const Hypergraph3& pattern, const Limits& limits) {
  if (pattern.edge_count() == 0) {
    return oracle.domain_size() <
           static_cast<uint64_t>(pattern.vertex_count());
  }
  return !find_mono_copy(oracle, pattern, Window{0, oracle.domain_size()},
                         limits)
              .has_value();
}

}  // namespace ramsey3
