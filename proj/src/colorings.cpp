#include "ramsey3/colorings.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ramsey3/classifier.hpp"
#include "ramsey3/rng.hpp"

namespace ramsey3 {

int bit_at(uint64_t x, int i) {
  if (i < 0) throw DomainError("bit: negative position");
  if (i >= 64) return 0;
  return static_cast<int>((x >> i) & 1u);
}

int delta(uint64_t x, uint64_t y) {
  if (x == y) throw DomainError("delta: arguments must differ");
  return std::bit_width(x ^ y) - 1;
}

ColorLabel ColorLabel::pair(int64_t t, int64_t s) {
  return ColorLabel{Kind::Pair, t, s, nullptr};
}

ColorLabel ColorLabel::coord(int64_t j, int64_t s) {
  return ColorLabel{Kind::Coord, j, s, nullptr};
}

ColorLabel ColorLabel::base(ColorLabel c) {
  return ColorLabel{Kind::Base, 0, 0,
                    std::make_shared<const ColorLabel>(std::move(c))};
}

ColorLabel ColorLabel::index(int64_t i) {
  return ColorLabel{Kind::Index, i, 0, nullptr};
}

int ColorLabel::compare(const ColorLabel& o) const {
  if (kind != o.kind) return kind < o.kind ? -1 : 1;
  if (a != o.a) return a < o.a ? -1 : 1;
  if (b != o.b) return b < o.b ? -1 : 1;
  if (!inner && !o.inner) return 0;
  if (!inner) return -1;
  if (!o.inner) return 1;
  return inner->compare(*o.inner);
}

std::string ColorLabel::to_string() const {
  switch (kind) {
    case Kind::Pair:
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Coord:
      return "coord(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Base:
      return "base(" + (inner ? inner->to_string() : "?") + ")";
    case Kind::Index:
      return "index(" + std::to_string(a) + ")";
  }
  return "?";
}

namespace {

void require_ascending(uint64_t x, uint64_t y, uint64_t z, uint64_t domain,
                       const char* who) {
  if (!(x < y && y < z)) {
    throw DomainError(std::string(who) + ": triple must be strictly ascending");
  }
  if (z >= domain) {
    throw DomainError(std::string(who) + ": vertex out of domain");
  }
}

}  // namespace

// ---------------------------------------------------------------- PhiColoring

PhiColoring::PhiColoring(int q) : q_(q) {
  if (q < 2 || q % 2 != 0) {
    throw DomainError("phi-q: q must be even and at least 2");
  }
}

uint64_t PhiColoring::domain_size() const {
  if (q_ >= 12) return UINT64_MAX;  // true domain 2^{2^{q/2}} exceeds 64 bits
  return 1ull << (1ull << (q_ / 2));
}

ColorLabel PhiColoring::eval(uint64_t x, uint64_t y, uint64_t z) const {
  require_ascending(x, y, z, domain_size(), "phi-q");
  const int d1 = delta(x, y);
  const int d2 = delta(y, z);
  // d1 != d2 always (ascending triples); delta would throw otherwise.
  const int t = delta(static_cast<uint64_t>(d1), static_cast<uint64_t>(d2));
  return ColorLabel::pair(t, d1 > d2 ? 1 : 0);
}

std::string PhiColoring::describe() const {
  return "phi-q:q=" + std::to_string(q_);
}

// --------------------------------------------------- RandomTripartiteColoring

RandomTripartiteColoring::RandomTripartiteColoring(int q, uint64_t n,
                                                   uint64_t seed)
    : q_(q), n_(n), seed_(seed) {
  if (q < 1) throw DomainError("tripartite: q must be positive");
  if (n < 3) throw DomainError("tripartite: needs at least 3 vertices");
  const uint64_t triples = n * (n - 1) * (n - 2) / 6;
  if (n > 4096 || triples * static_cast<uint64_t>(q) > (1ull << 31)) {
    throw CapExceeded("tripartite: totality check too large at n=" +
                      std::to_string(n) + ", q=" + std::to_string(q));
  }
  Rng rng(seed);
  std::vector<uint64_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  parts_.assign(q, std::vector<uint8_t>(n, 0));
  const uint64_t base = n / 3, rem = n % 3;
  for (int copy = 0; copy < q; ++copy) {
    rng.shuffle(order);
    uint64_t at = 0;
    for (uint8_t p = 0; p < 3; ++p) {
      const uint64_t size = base + (p < rem ? 1 : 0);
      for (uint64_t i = 0; i < size; ++i) parts_[copy][order[at++]] = p;
    }
  }
}

int RandomTripartiteColoring::part(int copy, uint64_t v) const {
  if (copy < 0 || copy >= q_ || v >= n_) {
    throw DomainError("tripartite: part query out of range");
  }
  return parts_[copy][v];
}

ColorLabel RandomTripartiteColoring::eval(uint64_t x, uint64_t y,
                                          uint64_t z) const {
  require_ascending(x, y, z, n_, "tripartite");
  for (int copy = 0; copy < q_; ++copy) {
    const auto& p = parts_[copy];
    if (p[x] != p[y] && p[x] != p[z] && p[y] != p[z]) {
      return ColorLabel::index(copy + 1);
    }
  }
  throw DomainError("tripartite: triple " + std::to_string(x) + " " +
                    std::to_string(y) + " " + std::to_string(z) +
                    " is uncolored under seed " + std::to_string(seed_));
}

std::vector<std::array<uint64_t, 3>> RandomTripartiteColoring::uncolored()
    const {
  std::vector<std::array<uint64_t, 3>> missing;
  for (uint64_t x = 0; x < n_; ++x) {
    for (uint64_t y = x + 1; y < n_; ++y) {
      for (uint64_t z = y + 1; z < n_; ++z) {
        bool split = false;
        for (int copy = 0; copy < q_ && !split; ++copy) {
          const auto& p = parts_[copy];
          split = p[x] != p[y] && p[x] != p[z] && p[y] != p[z];
        }
        if (!split) missing.push_back({x, y, z});
      }
    }
  }
  return missing;
}

std::string RandomTripartiteColoring::describe() const {
  return "tripartite:q=" + std::to_string(q_) + ",N=" + std::to_string(n_) +
         ",seed=" + std::to_string(seed_);
}

std::variant<OraclePtr, TripartiteFailure> make_random_tripartite(
    int q, uint64_t n, uint64_t seed, const Limits&) {
  auto oracle = std::make_shared<RandomTripartiteColoring>(q, n, seed);
  auto missing = oracle->uncolored();
  if (!missing.empty()) {
    return TripartiteFailure{q, n, seed, std::move(missing)};
  }
  return OraclePtr(std::move(oracle));
}

// ------------------------------------------------------------ ProductColoring

ProductColoring::ProductColoring(OraclePtr base, int q)
    : base_(std::move(base)), q_(q) {
  if (!base_) throw DomainError("product: base coloring required");
  if (q < 1) throw DomainError("product: q must be positive");
  const uint64_t n = base_->domain_size();
  if (n < 3) throw DomainError("product: base domain too small");
  domain_ = 1;
  for (int i = 0; i < q; ++i) {
    if (domain_ > UINT64_MAX / n) {
      throw CapExceeded("product: domain N^q exceeds 64 bits");
    }
    domain_ *= n;
  }
}

uint64_t ProductColoring::color_count() const {
  return base_->color_count() + 2 * static_cast<uint64_t>(q_);
}

std::vector<uint64_t> ProductColoring::coords(uint64_t v) const {
  if (v >= domain_) throw DomainError("product: vertex out of domain");
  const uint64_t n = base_->domain_size();
  std::vector<uint64_t> c(q_);
  for (int j = q_ - 1; j >= 0; --j) {
    c[j] = v % n;
    v /= n;
  }
  return c;
}

ColorLabel ProductColoring::eval(uint64_t x, uint64_t y, uint64_t z) const {
  require_ascending(x, y, z, domain_, "product");
  return product_case(coords(x), coords(y), coords(z), base_.get());
}

std::string ProductColoring::describe() const {
  return "product:q=" + std::to_string(q_) + ",base=" + base_->describe();
}

ColorLabel product_case(const std::vector<uint64_t>& xs,
                        const std::vector<uint64_t>& ys,
                        const std::vector<uint64_t>& zs,
                        const ColoringOracle* base) {
  if (xs.size() != ys.size() || ys.size() != zs.size() || xs.empty()) {
    throw DomainError("product: vectors must share a positive length");
  }
  if (!std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(),
                                    ys.end()) ||
      !std::lexicographical_compare(ys.begin(), ys.end(), zs.begin(),
                                    zs.end())) {
    throw DomainError(
        "product: vectors must be strictly ascending lexicographically");
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == ys[i] && ys[i] == zs[i]) continue;
    const int64_t j = static_cast<int64_t>(i) + 1;  // 1-based coordinate
    if (xs[i] < ys[i] && ys[i] < zs[i]) {
      if (!base) throw DomainError("product: base coloring required");
      return ColorLabel::base(base->eval(xs[i], ys[i], zs[i]));
    }
    if (xs[i] < ys[i] && ys[i] == zs[i]) return ColorLabel::coord(j, 0);
    if (xs[i] == ys[i] && ys[i] < zs[i]) return ColorLabel::coord(j, 1);
    // Lexicographic order x < y < z rules out every other value pattern.
    throw DomainError("product: vectors out of order at coordinate " +
                      std::to_string(j));
  }
  throw DomainError("product: identical vectors");
}

// ------------------------------------------------------------ RainbowColoring

namespace {

uint64_t choose2(uint64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }
uint64_t choose3(uint64_t m) {
  return m < 3 ? 0 : m * (m - 1) / 2 * (m - 2) / 3;
}

}  // namespace

RainbowColoring::RainbowColoring(uint64_t n) : n_(n) {
  if (n < 3) throw DomainError("rainbow: needs at least 3 vertices");
  if (n > (1ull << 20)) throw CapExceeded("rainbow: domain too large");
}

uint64_t RainbowColoring::color_count() const { return choose3(n_); }

ColorLabel RainbowColoring::eval(uint64_t x, uint64_t y, uint64_t z) const {
  require_ascending(x, y, z, n_, "rainbow");
  // 1 + lexicographic rank of (x, y, z) among ascending triples of [0, n).
  const uint64_t before_x = choose3(n_) - choose3(n_ - x);
  const uint64_t before_y = choose2(n_ - x - 1) - choose2(n_ - y);
  return ColorLabel::index(
      static_cast<int64_t>(before_x + before_y + (z - y - 1) + 1));
}

std::string RainbowColoring::describe() const {
  return "rainbow:N=" + std::to_string(n_);
}

// --------------------------------------------------------------- parse_oracle

namespace {

std::map<std::string, uint64_t> parse_params(const std::string& text,
                                             const std::string& name) {
  std::map<std::string, uint64_t> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParseError("oracle " + name + ": malformed parameter '" + item +
                        "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (out.count(key)) {
      throw ParseError("oracle " + name + ": duplicate parameter '" + key +
                        "'");
    }
    try {
      size_t used = 0;
      out[key] = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError("oracle " + name + ": parameter '" + key +
                        "' needs a nonnegative integer, got '" + value + "'");
    }
  }
  return out;
}

uint64_t take(std::map<std::string, uint64_t>& params, const std::string& key,
              const std::string& name,
              std::optional<uint64_t> fallback = std::nullopt) {
  if (auto it = params.find(key); it != params.end()) {
    const uint64_t v = it->second;
    params.erase(it);
    return v;
  }
  if (fallback) return *fallback;
  throw ParseError("oracle " + name + ": missing parameter '" + key + "'");
}

void expect_empty(const std::map<std::string, uint64_t>& params,
                  const std::string& name) {
  if (!params.empty()) {
    throw ParseError("oracle " + name + ": unknown parameter '" +
                      params.begin()->first + "'");
  }
}

OraclePtr tripartite_or_throw(int q, uint64_t n, uint64_t seed,
                              const Limits& limits) {
  auto result = make_random_tripartite(q, n, seed, limits);
  if (auto* failure = std::get_if<TripartiteFailure>(&result)) {
    std::string msg = "tripartite: seed " + std::to_string(seed) + " leaves " +
                      std::to_string(failure->uncolored.size()) +
                      " triple(s) uncolored (try another seed):";
    for (size_t i = 0; i < failure->uncolored.size() && i < 5; ++i) {
      const auto& t = failure->uncolored[i];
      msg += " {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
             std::to_string(t[2]) + "}";
    }
    throw DomainError(msg);
  }
  return std::get<OraclePtr>(result);
}

}  // namespace

OraclePtr parse_oracle(const std::string& text, const Limits& limits) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  auto params = parse_params(
      colon == std::string::npos ? "" : text.substr(colon + 1), name);
  if (name == "phi-q") {
    const auto q = static_cast<int>(take(params, "q", name));
    expect_empty(params, name);
    return std::make_shared<PhiColoring>(q);
  }
  if (name == "tripartite") {
    const auto q = static_cast<int>(take(params, "q", name));
    const uint64_t n = take(params, "N", name);
    const uint64_t seed = take(params, "seed", name);
    expect_empty(params, name);
    return tripartite_or_throw(q, n, seed, limits);
  }
  if (name == "product") {
    const auto q = static_cast<int>(take(params, "q", name));
    const uint64_t n = take(params, "N", name);
    const uint64_t seed = take(params, "seed", name);
    const auto base_q = static_cast<int>(take(params, "base-q", name, 54));
    expect_empty(params, name);
    return std::make_shared<ProductColoring>(
        tripartite_or_throw(base_q, n, seed, limits), q);
  }
  if (name == "rainbow") {
    const uint64_t n = take(params, "N", name);
    expect_empty(params, name);
    return std::make_shared<RainbowColoring>(n);
  }
  throw ParseError("unknown oracle '" + name +
                    "' (expected phi-q, tripartite, product or rainbow)");
}

// -------------------------------------------------------------- mono searches

namespace {

// Ascending-combination scan for complete patterns: every triple of the
// chosen vertices must carry one common label, checked incrementally as each
// vertex joins, so the first hit is the lexicographically least witness.
std::optional<MonoCopy> find_mono_clique(const ColoringOracle& oracle, int h,
                                         const std::vector<uint64_t>& hosts,
                                         BudgetCounter& counter) {
  std::vector<uint64_t> chosen;
  std::optional<ColorLabel> label;
  const int count = static_cast<int>(hosts.size());
  auto dfs = [&](auto&& self, int from) -> std::optional<MonoCopy> {
    const int depth = static_cast<int>(chosen.size());
    if (depth == h) return MonoCopy{chosen, *label};
    for (int i = from; count - i >= h - depth; ++i) {
      counter.tick();
      const uint64_t v = hosts[i];
      bool ok = true;
      const bool had_label = label.has_value();
      for (int a = 0; a < depth && ok; ++a) {
        for (int b = a + 1; b < depth && ok; ++b) {
          const ColorLabel got = oracle.eval(chosen[a], chosen[b], v);
          if (!label) {
            label = got;
          } else {
            ok = got == *label;
          }
        }
      }
      if (ok) {
        chosen.push_back(v);
        if (auto found = self(self, i + 1)) return found;
        chosen.pop_back();
      }
      if (!had_label) label.reset();
    }
    return std::nullopt;
  };
  return dfs(dfs, 0);
}

}  // namespace

std::optional<MonoCopy> find_mono_copy(const ColoringOracle& oracle,
                                       const Hypergraph3& pattern,
                                       const std::vector<uint64_t>& hosts,
                                       const Limits& limits) {
  if (pattern.edge_count() == 0) {
    throw DomainError("mono-copy search: pattern needs at least one edge");
  }
  for (size_t i = 0; i < hosts.size(); ++i) {
    if (hosts[i] >= oracle.domain_size() ||
        (i > 0 && hosts[i - 1] >= hosts[i])) {
      throw DomainError(
          "mono-copy search: hosts must ascend within the oracle domain");
    }
  }
  const int h = pattern.vertex_count();
  if (static_cast<size_t>(h) > hosts.size()) return std::nullopt;
  BudgetCounter counter(limits.budget);
  if (pattern.edge_count() ==
      static_cast<int>(choose3(static_cast<uint64_t>(h)))) {
    return find_mono_clique(oracle, h, hosts, counter);
  }

  // Assign pattern vertices in descending-degree order; an edge is checked as
  // soon as its last vertex is mapped, and every checked edge must repeat the
  // first edge's label.
  std::vector<int> order(h);
  std::iota(order.begin(), order.end(), 0);
  const std::vector<int> deg = pattern.degrees();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<int> slot_of(h);
  for (int s = 0; s < h; ++s) slot_of[order[s]] = s;
  std::vector<std::vector<Triple>> ready_at(h);
  for (const Triple& e : pattern.edges()) {
    ready_at[std::max({slot_of[e[0]], slot_of[e[1]], slot_of[e[2]]})]
        .push_back(e);
  }

  std::vector<uint64_t> to_host(h, 0);
  std::vector<bool> used(hosts.size(), false);
  std::optional<ColorLabel> label;
  auto dfs = [&](auto&& self, int slot) -> bool {
    if (slot == h) return true;
    for (size_t i = 0; i < hosts.size(); ++i) {
      if (used[i]) continue;
      counter.tick();
      to_host[order[slot]] = hosts[i];
      bool ok = true;
      const bool had_label = label.has_value();
      for (const Triple& e : ready_at[slot]) {
        uint64_t t[3] = {to_host[e[0]], to_host[e[1]], to_host[e[2]]};
        std::sort(t, t + 3);
        const ColorLabel got = oracle.eval(t[0], t[1], t[2]);
        if (!label) {
          label = got;
        } else if (!(got == *label)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[i] = true;
        if (self(self, slot + 1)) return true;
        used[i] = false;
      }
      if (!had_label) label.reset();
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return MonoCopy{to_host, *label};
}

std::optional<MonoCopy> find_mono_copy(const ColoringOracle& oracle,
                                       const Hypergraph3& pattern,
                                       Window window, const Limits& limits) {
  if (window.lo >= window.hi || window.hi > oracle.domain_size()) {
    throw DomainError("mono-copy search: bad window");
  }
  if (window.hi - window.lo > (1ull << 22)) {
    throw CapExceeded("mono-copy search: window too large");
  }
  std::vector<uint64_t> hosts(window.hi - window.lo);
  std::iota(hosts.begin(), hosts.end(), window.lo);
  return find_mono_copy(oracle, pattern, hosts, limits);
}

// -------------------------------------------------------------------- audits

std::function<bool(const Hypergraph3&, const Limits&)> named_predicate(
    const std::string& name) {
  if (name == "in-U") {
    return [](const Hypergraph3& g, const Limits& limits) {
      return min_level(g, limits).first != kLevelInfinite;
    };
  }
  if (name == "in-L1") {
    return [](const Hypergraph3& g, const Limits& limits) {
      return l1_member(g, limits).first;
    };
  }
  if (name == "tripartite") {
    return [](const Hypergraph3& g, const Limits& limits) {
      return is_tripartite(g, limits).has_value();
    };
  }
  if (name == "at-most-one-edge") {
    return [](const Hypergraph3& g, const Limits&) {
      return g.edge_count() <= 1;
    };
  }
  throw ParseError("unknown predicate '" + name +
                    "' (expected in-U, in-L1, tripartite or at-most-one-edge)");
}

AuditReport audit_coloring(const ColoringOracle& oracle, Window window,
                           int h_max, const std::string& predicate_name,
                           const Limits& limits) {
  if (window.lo >= window.hi || window.hi > oracle.domain_size()) {
    throw DomainError("audit: bad window");
  }
  const uint64_t width = window.hi - window.lo;
  if (h_max < 3) throw DomainError("audit: h_max must be at least 3");
  const auto predicate = named_predicate(predicate_name);

  AuditReport report;
  report.oracle = oracle.describe();
  report.predicate_name = predicate_name;
  report.window_lo = window.lo;
  report.window_hi = window.hi;
  report.h_max = h_max;

  BudgetCounter counter(limits.budget);
  std::map<CanonicalKey, bool> verdicts;
  std::map<CanonicalKey, AuditPattern> found;

  std::vector<uint64_t> subset;
  auto visit_subset = [&](int h) {
    counter.tick();
    ++report.subsets_checked;
    std::map<ColorLabel, std::vector<Triple>> classes;
    for (int i = 0; i < h; ++i) {
      for (int j = i + 1; j < h; ++j) {
        for (int k = j + 1; k < h; ++k) {
          classes[oracle.eval(subset[i], subset[j], subset[k])].push_back(
              Triple{i, j, k});
        }
      }
    }
    for (auto& [label, edges] : classes) {
      Hypergraph3 pattern(h, std::move(edges));
      CanonicalKey key = canonical_key(pattern);
      auto it = verdicts.find(key);
      if (it == verdicts.end()) {
        const bool passes = predicate(pattern, limits);
        it = verdicts.emplace(key, passes).first;
        found.emplace(std::move(key),
                      AuditPattern{it->first, std::move(pattern), subset, label,
                                   passes});
      }
      report.all_pass = report.all_pass && it->second;
    }
  };
  auto combos = [&](auto&& self, uint64_t from, int want, int h) -> void {
    if (want == 0) {
      visit_subset(h);
      return;
    }
    for (uint64_t v = from; window.hi - v >= static_cast<uint64_t>(want); ++v) {
      subset.push_back(v);
      self(self, v + 1, want - 1, h);
      subset.pop_back();
    }
  };
  for (int h = 3; h <= h_max && static_cast<uint64_t>(h) <= width; ++h) {
    combos(combos, window.lo, h, h);
  }
  report.patterns.reserve(found.size());
  for (auto& [key, pattern] : found) report.patterns.push_back(pattern);
  return report;
}

OrderedPartition coord_partition(const ProductColoring& oracle,
                                 const std::vector<uint64_t>& to_host, int j,
                                 int s) {
  if (j < 1 || j > oracle.vector_length()) {
    throw DomainError("coord partition: coordinate out of range");
  }
  if (s != 0 && s != 1) throw DomainError("coord partition: s must be 0 or 1");
  std::map<uint64_t, std::vector<int>> by_value;
  for (size_t v = 0; v < to_host.size(); ++v) {
    by_value[oracle.coords(to_host[v])[j - 1]].push_back(static_cast<int>(v));
  }
  OrderedPartition partition;
  for (auto& [value, block] : by_value) partition.blocks.push_back(block);
  if (s == 1) std::reverse(partition.blocks.begin(), partition.blocks.end());
  return partition;
}

}  // namespace ramsey3
