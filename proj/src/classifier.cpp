#include "ramsey3/classifier.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey3 {

namespace {

int ordered_cap(const Hypergraph3& g, const Limits& limits, const char* op) {
  if (g.vertex_count() > limits.max_n_ordered) {
    throw CapExceeded(std::string(op) + ": " +
                      std::to_string(g.vertex_count()) +
                      " vertices exceed the ordered-partition cap of " +
                      std::to_string(limits.max_n_ordered));
  }
  return limits.max_n_ordered;
}

// Enumerates partitions of [0, n) in restricted-growth-string order; blocks
// are listed by first occurrence.  Callback returns false to stop.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
  if (n == 0) return;
  std::vector<int> label(n, 0);
  std::vector<int> prefix_max(n, 0);
  auto emit = [&]() {
    int t = *std::max_element(label.begin(), label.end()) + 1;
    OrderedPartition p;
    p.blocks.assign(t, {});
    for (int v = 0; v < n; ++v) p.blocks[label[v]].push_back(v);
    return fn(const_cast<const OrderedPartition&>(p));
  };
  // Lexicographic successor over restricted growth strings.
  for (;;) {
    prefix_max[0] = 0;
    for (int i = 1; i < n; ++i) {
      prefix_max[i] = std::max(prefix_max[i - 1], label[i - 1]);
    }
    if (!emit()) return;
    int i = n - 1;
    while (i > 0 && label[i] == prefix_max[i] + 1) --i;
    if (i == 0) return;
    ++label[i];
    for (int j = i + 1; j < n; ++j) label[j] = 0;
  }
}

std::string concrete_key(const Hypergraph3& g) { return format_hypergraph(g); }

void set_diag(std::string* diagnostic, const std::string& msg) {
  if (diagnostic && diagnostic->empty()) *diagnostic = msg;
}

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Polynomial: return "Polynomial";
    case Regime::SingleExpZone: return "SingleExpZone";
    case Regime::DoubleExp: return "DoubleExp";
  }
  return "?";
}

std::string bound_token(Regime r, int min_ell) {
  switch (r) {
    case Regime::Polynomial: return "q^{Theta(1)}";
    case Regime::SingleExpZone:
      return min_ell == 1
                 ? "2^{O(q log q)}"
                 : "2^{O(q^" + std::to_string(min_ell) + " log q)}";
    case Regime::DoubleExp: return "2^{2^{O(q log q)}}";
  }
  return "?";
}

std::string bounds_note_for(Regime r, int min_ell, bool no_growth) {
  if (no_growth) return "no Ramsey growth: r(G;q) = v(G) for every q";
  switch (r) {
    case Regime::Polynomial: return "r(G;q) = q^{Theta(1)}";
    case Regime::SingleExpZone:
      return "2^{Omega(q)} <= r(G;q) <= " +
             bound_token(Regime::SingleExpZone, min_ell);
    case Regime::DoubleExp:
      return "2^{2^{q/2}} <= r(G;q) <= 2^{2^{O(q log q)}}";
  }
  return "?";
}

int Classifier::level_value(const Hypergraph3& g, const Limits& limits,
                            BudgetCounter& counter) {
  if (g.vertex_count() > std::min(limits.max_n, 64)) {
    throw CapExceeded("min_level: " + std::to_string(g.vertex_count()) +
                      " vertices exceed the cap of " +
                      std::to_string(std::min(limits.max_n, 64)));
  }
  const CanonicalKey key = canonical_key(g);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = level_memo_.find(key); it != level_memo_.end()) {
      return it->second;
    }
  }
  counter.tick();
  int value = kLevelInfinite;
  if (is_tripartite(g, limits)) {
    value = 0;
  } else if (exact_transversal(g, limits)) {
    value = 1;
  } else {
    for (const std::vector<int>& u : collapsible_sets(g, limits)) {
      const int inner = level_value(induced(g, u), limits, counter);
      if (inner == kLevelInfinite) continue;
      const int quotient =
          level_value(collapse(g, u).quotient, limits, counter);
      if (quotient == kLevelInfinite) continue;
      value = std::min(value, std::max(quotient + 1, inner));
      if (value == 1) break;  // nothing below is reachable via a collapse
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  level_memo_.emplace(key, value);
  return value;
}

CertPtr Classifier::level_certificate(const Hypergraph3& g,
                                      const Limits& limits,
                                      BudgetCounter& counter) {
  const std::string key = concrete_key(g);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = level_cert_memo_.find(key); it != level_cert_memo_.end()) {
      return it->second;
    }
  }
  counter.tick();
  CertPtr cert;
  if (auto tri = is_tripartite(g, limits)) {
    cert = std::make_shared<Certificate>(Certificate{TripartiteNode{*tri}});
  } else if (auto trans = exact_transversal(g, limits)) {
    cert = std::make_shared<Certificate>(Certificate{TransversalNode{*trans}});
  } else {
    const int value = level_value(g, limits, counter);
    if (value != kLevelInfinite) {
      // First candidate (in (size, lex) order) achieving the minimum.
      for (const std::vector<int>& u : collapsible_sets(g, limits)) {
        CollapseOutcome c = collapse(g, u);
        const int inner = level_value(c.inner, limits, counter);
        if (inner == kLevelInfinite) continue;
        const int quotient = level_value(c.quotient, limits, counter);
        if (quotient == kLevelInfinite) continue;
        if (std::max(quotient + 1, inner) != value) continue;
        cert = std::make_shared<Certificate>(Certificate{CollapseNode{
            u, level_certificate(c.quotient, limits, counter),
            level_certificate(c.inner, limits, counter)}});
        break;
      }
      if (!cert) {
        throw Error("internal: no collapse branch achieves the stored level");
      }
    } else {
      ExhaustedNode node;
      for (const std::vector<int>& u : collapsible_sets(g, limits)) {
        CollapseOutcome c = collapse(g, u);
        ExhaustedBranch branch;
        branch.collapsed = u;
        if (level_value(c.inner, limits, counter) == kLevelInfinite) {
          branch.quotient_failed = false;
          branch.failing = level_certificate(c.inner, limits, counter);
        } else {
          branch.quotient_failed = true;
          branch.failing = level_certificate(c.quotient, limits, counter);
        }
        node.branches.push_back(std::move(branch));
      }
      cert = std::make_shared<Certificate>(Certificate{std::move(node)});
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  level_cert_memo_.emplace(key, cert);
  return cert;
}

std::pair<int, CertPtr> Classifier::min_level(const Hypergraph3& g,
                                              const Limits& limits) {
  BudgetCounter counter(limits.budget);
  const int value = level_value(g, limits, counter);
  return {value, level_certificate(g, limits, counter)};
}

bool Classifier::l1_value(const Hypergraph3& g, const Limits& limits,
                          BudgetCounter& counter) {
  ordered_cap(g, limits, "l1_member");
  const CanonicalKey key = canonical_key(g);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = l1_memo_.find(key); it != l1_memo_.end()) return it->second;
  }
  counter.tick();
  bool value = false;
  if (forward_colorable(g, limits)) {
    value = true;
  } else {
    for_each_partition(g.vertex_count(), [&](const OrderedPartition& p) {
      if (p.blocks.size() < 2) return true;
      counter.tick();
      auto d = decompose(g, p, /*require_big_block=*/false);
      if (!d) return true;
      if (!is_tripartite(d->quotient, limits)) return true;
      bool all = true;
      for (const Hypergraph3& part : d->parts) {
        if (!l1_value(part, limits, counter)) {
          all = false;
          break;
        }
      }
      if (all) {
        value = true;
        return false;
      }
      return true;
    });
  }
  std::lock_guard<std::mutex> lock(mu_);
  l1_memo_.emplace(key, value);
  return value;
}

CertPtr Classifier::l1_certificate(const Hypergraph3& g, const Limits& limits,
                                   BudgetCounter& counter) {
  const std::string key = concrete_key(g);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = l1_cert_memo_.find(key); it != l1_cert_memo_.end()) {
      return it->second;
    }
  }
  counter.tick();
  CertPtr cert;
  if (auto fwd = forward_colorable(g, limits)) {
    cert = std::make_shared<Certificate>(Certificate{ForwardNode{*fwd}});
  } else if (l1_value(g, limits, counter)) {
    for_each_partition(g.vertex_count(), [&](const OrderedPartition& p) {
      if (p.blocks.size() < 2) return true;
      auto d = decompose(g, p, /*require_big_block=*/false);
      if (!d) return true;
      auto tri = is_tripartite(d->quotient, limits);
      if (!tri) return true;
      bool all = true;
      for (const Hypergraph3& part : d->parts) {
        if (!l1_value(part, limits, counter)) {
          all = false;
          break;
        }
      }
      if (!all) return true;
      DecomposeNode node;
      node.blocks = p;
      node.quotient =
          std::make_shared<Certificate>(Certificate{TripartiteNode{*tri}});
      for (const Hypergraph3& part : d->parts) {
        node.parts.push_back(l1_certificate(part, limits, counter));
      }
      cert = std::make_shared<Certificate>(Certificate{std::move(node)});
      return false;
    });
  } else {
    L1ExhaustedNode node;
    for_each_partition(g.vertex_count(), [&](const OrderedPartition& p) {
      if (p.blocks.size() < 2) return true;
      auto d = decompose(g, p, /*require_big_block=*/false);
      if (!d) return true;
      L1Branch branch;
      branch.blocks = p;
      if (!is_tripartite(d->quotient, limits)) {
        branch.quotient_not_tripartite = true;
      } else {
        for (size_t i = 0; i < d->parts.size(); ++i) {
          if (!l1_value(d->parts[i], limits, counter)) {
            branch.failing_part = static_cast<int>(i);
            branch.failing = l1_certificate(d->parts[i], limits, counter);
            break;
          }
        }
      }
      node.branches.push_back(std::move(branch));
      return true;
    });
    cert = std::make_shared<Certificate>(Certificate{std::move(node)});
  }
  std::lock_guard<std::mutex> lock(mu_);
  l1_cert_memo_.emplace(key, cert);
  return cert;
}

std::pair<bool, CertPtr> Classifier::l1_member(const Hypergraph3& g,
                                               const Limits& limits) {
  BudgetCounter counter(limits.budget);
  const bool value = l1_value(g, limits, counter);
  return {value, l1_certificate(g, limits, counter)};
}

Verdict Classifier::classify(const Hypergraph3& g, const Limits& limits) {
  auto [value, cert] = min_level(g, limits);
  Verdict v;
  v.min_ell = value;
  v.regime = value == 0                ? Regime::Polynomial
             : value == kLevelInfinite ? Regime::DoubleExp
                                       : Regime::SingleExpZone;
  v.certificate = cert;
  v.no_growth = g.edge_count() == 0;
  v.few_edges = g.edge_count() < 2;
  v.bounds_note = bounds_note_for(v.regime, v.min_ell, v.no_growth);
  return v;
}

Classifier& shared_classifier() {
  static Classifier instance;
  return instance;
}

std::pair<int, CertPtr> min_level(const Hypergraph3& g, const Limits& limits) {
  return shared_classifier().min_level(g, limits);
}

std::pair<bool, CertPtr> l1_member(const Hypergraph3& g, const Limits& limits) {
  return shared_classifier().l1_member(g, limits);
}

Verdict classify(const Hypergraph3& g, const Limits& limits) {
  return shared_classifier().classify(g, limits);
}

namespace {

// Validates a level certificate and returns the level it establishes
// (kLevelInfinite for a valid exhaustion proof), or nullopt when invalid.
std::optional<int> certified_level(const Hypergraph3& g, const CertPtr& cert,
                                   std::string* diagnostic,
                                   const Limits& limits,
                                   const std::string& path) {
  if (!cert) {
    set_diag(diagnostic, path + ": missing certificate node");
    return std::nullopt;
  }
  if (const auto* tri = std::get_if<TripartiteNode>(&cert->node)) {
    if (!check_tripartite_witness(g, tri->parts)) {
      set_diag(diagnostic, path + ": invalid tripartite witness");
      return std::nullopt;
    }
    return 0;
  }
  if (const auto* tr = std::get_if<TransversalNode>(&cert->node)) {
    if (!check_transversal_witness(g, tr->hitting)) {
      set_diag(diagnostic, path + ": invalid transversal witness");
      return std::nullopt;
    }
    return 1;
  }
  if (const auto* col = std::get_if<CollapseNode>(&cert->node)) {
    if (!is_collapsible(g, col->collapsed)) {
      set_diag(diagnostic, path + ": claimed set is not collapsible");
      return std::nullopt;
    }
    CollapseOutcome c = collapse(g, col->collapsed);
    auto lq = certified_level(c.quotient, col->quotient, diagnostic, limits,
                              path + "/quotient");
    if (!lq) return std::nullopt;
    auto li = certified_level(c.inner, col->inner, diagnostic, limits,
                              path + "/inner");
    if (!li) return std::nullopt;
    if (*lq == kLevelInfinite || *li == kLevelInfinite) {
      set_diag(diagnostic, path + ": collapse side certifies no finite level");
      return std::nullopt;
    }
    return std::max(*lq + 1, *li);
  }
  if (const auto* ex = std::get_if<ExhaustedNode>(&cert->node)) {
    if (is_tripartite(g, limits)) {
      set_diag(diagnostic, path + ": graph is tripartite, not level-infinite");
      return std::nullopt;
    }
    if (exact_transversal(g, limits)) {
      set_diag(diagnostic,
               path + ": graph has an exact transversal, not level-infinite");
      return std::nullopt;
    }
    const auto all = collapsible_sets(g, limits);
    if (all.size() != ex->branches.size()) {
      set_diag(diagnostic, path + ": branch list does not cover all " +
                               std::to_string(all.size()) +
                               " collapsible sets");
      return std::nullopt;
    }
    for (size_t i = 0; i < all.size(); ++i) {
      if (ex->branches[i].collapsed != all[i]) {
        set_diag(diagnostic,
                 path + ": branch " + std::to_string(i) +
                     " does not match the enumerated collapsible set");
        return std::nullopt;
      }
      CollapseOutcome c = collapse(g, all[i]);
      const Hypergraph3& side =
          ex->branches[i].quotient_failed ? c.quotient : c.inner;
      auto ls = certified_level(side, ex->branches[i].failing, diagnostic,
                                limits,
                                path + "/branch" + std::to_string(i));
      if (!ls) return std::nullopt;
      if (*ls != kLevelInfinite) {
        set_diag(diagnostic, path + ": branch " + std::to_string(i) +
                                 " failing side is not level-infinite");
        return std::nullopt;
      }
    }
    return kLevelInfinite;
  }
  set_diag(diagnostic, path + ": node kind not valid in a level certificate");
  return std::nullopt;
}

// Validates a closure certificate; returns the membership value it
// establishes, or nullopt when invalid.
std::optional<bool> certified_l1(const Hypergraph3& g, const CertPtr& cert,
                                 std::string* diagnostic, const Limits& limits,
                                 const std::string& path) {
  if (!cert) {
    set_diag(diagnostic, path + ": missing certificate node");
    return std::nullopt;
  }
  if (const auto* fwd = std::get_if<ForwardNode>(&cert->node)) {
    if (!check_forward_witness(g, fwd->blocks)) {
      set_diag(diagnostic, path + ": invalid forward-coloring witness");
      return std::nullopt;
    }
    return true;
  }
  if (const auto* dec = std::get_if<DecomposeNode>(&cert->node)) {
    if (dec->blocks.blocks.size() < 2) {
      set_diag(diagnostic, path + ": decomposition needs at least two blocks");
      return std::nullopt;
    }
    std::optional<Decomposition> d;
    try {
      d = decompose(g, dec->blocks, /*require_big_block=*/false);
    } catch (const DomainError&) {
      d = std::nullopt;
    }
    if (!d) {
      set_diag(diagnostic, path + ": claimed blocks are not a decomposition");
      return std::nullopt;
    }
    const auto* tri = dec->quotient == nullptr
                          ? nullptr
                          : std::get_if<TripartiteNode>(&dec->quotient->node);
    if (tri == nullptr || !check_tripartite_witness(d->quotient, tri->parts)) {
      set_diag(diagnostic, path + ": quotient tripartite witness invalid");
      return std::nullopt;
    }
    if (dec->parts.size() != d->parts.size()) {
      set_diag(diagnostic, path + ": block certificate count mismatch");
      return std::nullopt;
    }
    for (size_t i = 0; i < d->parts.size(); ++i) {
      auto sub = certified_l1(d->parts[i], dec->parts[i], diagnostic, limits,
                              path + "/part" + std::to_string(i));
      if (!sub || !*sub) {
        set_diag(diagnostic, path + ": block " + std::to_string(i) +
                                 " is not certified as a member");
        return std::nullopt;
      }
    }
    return true;
  }
  if (const auto* ex = std::get_if<L1ExhaustedNode>(&cert->node)) {
    if (forward_colorable(g, limits)) {
      set_diag(diagnostic, path + ": graph is forward-colorable after all");
      return std::nullopt;
    }
    size_t next = 0;
    bool ok = true;
    for_each_partition(g.vertex_count(), [&](const OrderedPartition& p) {
      if (p.blocks.size() < 2) return true;
      auto d = decompose(g, p, /*require_big_block=*/false);
      if (!d) return true;
      if (next >= ex->branches.size()) {
        set_diag(diagnostic, path + ": decomposition list is incomplete");
        ok = false;
        return false;
      }
      const L1Branch& branch = ex->branches[next++];
      if (branch.blocks != p) {
        set_diag(diagnostic,
                 path + ": branch order does not match enumeration");
        ok = false;
        return false;
      }
      if (branch.quotient_not_tripartite) {
        if (is_tripartite(d->quotient, limits)) {
          set_diag(diagnostic,
                   path + ": quotient is tripartite despite the claim");
          ok = false;
          return false;
        }
        return true;
      }
      if (branch.failing_part < 0 ||
          branch.failing_part >= static_cast<int>(d->parts.size())) {
        set_diag(diagnostic, path + ": failing block index out of range");
        ok = false;
        return false;
      }
      auto sub = certified_l1(d->parts[branch.failing_part], branch.failing,
                              diagnostic, limits,
                              path + "/branch" + std::to_string(next - 1));
      if (!sub || *sub) {
        set_diag(diagnostic,
                 path + ": failing block is not certified as a non-member");
        ok = false;
        return false;
      }
      return true;
    });
    if (!ok) return std::nullopt;
    if (next != ex->branches.size()) {
      set_diag(diagnostic, path + ": branch list has extra entries");
      return std::nullopt;
    }
    return false;
  }
  set_diag(diagnostic, path + ": node kind not valid in a closure certificate");
  return std::nullopt;
}

}  // namespace

bool check_certificate(const Hypergraph3& g, const Verdict& claimed,
                       std::string* diagnostic, const Limits& limits) {
  if (diagnostic) diagnostic->clear();
  const Regime expected_regime =
      claimed.min_ell == 0                ? Regime::Polynomial
      : claimed.min_ell == kLevelInfinite ? Regime::DoubleExp
                                          : Regime::SingleExpZone;
  if (claimed.regime != expected_regime) {
    set_diag(diagnostic, "regime does not match min_ell");
    return false;
  }
  if (claimed.no_growth != (g.edge_count() == 0)) {
    set_diag(diagnostic, "no-growth flag does not match the edge count");
    return false;
  }
  if (claimed.few_edges != (g.edge_count() < 2)) {
    set_diag(diagnostic, "few-edges flag does not match the edge count");
    return false;
  }
  if (claimed.bounds_note !=
      bounds_note_for(claimed.regime, claimed.min_ell, claimed.no_growth)) {
    set_diag(diagnostic, "bounds note does not match the regime");
    return false;
  }
  auto level = certified_level(g, claimed.certificate, diagnostic, limits,
                               "certificate");
  if (!level) return false;
  if (*level != claimed.min_ell) {
    set_diag(diagnostic, "certificate establishes level " +
                             (*level == kLevelInfinite
                                  ? std::string("infinity")
                                  : std::to_string(*level)) +
                             ", verdict claims " +
                             (claimed.min_ell == kLevelInfinite
                                  ? std::string("infinity")
                                  : std::to_string(claimed.min_ell)));
    return false;
  }
  return true;
}

bool check_l1_certificate(const Hypergraph3& g, bool claimed_member,
                          const CertPtr& cert, std::string* diagnostic,
                          const Limits& limits) {
  if (diagnostic) diagnostic->clear();
  auto val = certified_l1(g, cert, diagnostic, limits, "certificate");
  if (!val) return false;
  if (*val != claimed_member) {
    set_diag(diagnostic, "certificate establishes the opposite membership");
    return false;
  }
  return true;
}

}  // namespace ramsey3
