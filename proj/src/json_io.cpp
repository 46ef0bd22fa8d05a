#include "ramsey3/json_io.hpp"

namespace ramsey3 {

using nlohmann::json;

json to_json(const Hypergraph3& g) {
  json edges = json::array();
  for (const Triple& e : g.edges()) edges.push_back({e[0], e[1], e[2]});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

json to_json(const ColorLabel& label) {
  switch (label.kind) {
    case ColorLabel::Kind::Pair:
      return {{"kind", "pair"}, {"t", label.a}, {"s", label.b}};
    case ColorLabel::Kind::Coord:
      return {{"kind", "coord"}, {"j", label.a}, {"s", label.b}};
    case ColorLabel::Kind::Base:
      return {{"kind", "base"},
              {"label", label.inner ? to_json(*label.inner) : json()}};
    case ColorLabel::Kind::Index:
      return {{"kind", "index"}, {"i", label.a}};
  }
  return json();
}

json to_json(const Partition3& parts) {
  return {parts.parts[0], parts.parts[1], parts.parts[2]};
}

json to_json(const OrderedPartition& blocks) { return json(blocks.blocks); }

json cert_json(const CertPtr& cert) {
  if (!cert) return json();
  json out;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TripartiteNode>) {
          out = {{"kind", "tripartite"},
                 {"witness", {{"parts", to_json(node.parts)}}}};
        } else if constexpr (std::is_same_v<T, TransversalNode>) {
          out = {{"kind", "transversal"},
                 {"witness", {{"hitting", node.hitting}}}};
        } else if constexpr (std::is_same_v<T, CollapseNode>) {
          out = {{"kind", "collapse"},
                 {"witness", {{"collapsed", node.collapsed}}},
                 {"children",
                  {{"quotient", cert_json(node.quotient)},
                   {"inner", cert_json(node.inner)}}}};
        } else if constexpr (std::is_same_v<T, ForwardNode>) {
          out = {{"kind", "forward"},
                 {"witness", {{"blocks", to_json(node.blocks)}}}};
        } else if constexpr (std::is_same_v<T, DecomposeNode>) {
          json parts = json::array();
          for (const CertPtr& p : node.parts) parts.push_back(cert_json(p));
          out = {{"kind", "decompose"},
                 {"witness", {{"blocks", to_json(node.blocks)}}},
                 {"children",
                  {{"quotient", cert_json(node.quotient)}, {"parts", parts}}}};
        } else if constexpr (std::is_same_v<T, ExhaustedNode>) {
          json branches = json::array();
          for (const ExhaustedBranch& b : node.branches) {
            branches.push_back(
                {{"collapsed", b.collapsed},
                 {"failing_side", b.quotient_failed ? "quotient" : "inner"},
                 {"failing", cert_json(b.failing)}});
          }
          out = {{"kind", "exhausted"}, {"branches", branches}};
        } else if constexpr (std::is_same_v<T, L1ExhaustedNode>) {
          json branches = json::array();
          for (const L1Branch& b : node.branches) {
            json entry = {{"blocks", to_json(b.blocks)}};
            if (b.quotient_not_tripartite) {
              entry["reason"] = "quotient-not-tripartite";
            } else {
              entry["reason"] = "part-outside-family";
              entry["failing_part"] = b.failing_part;
              entry["failing"] = cert_json(b.failing);
            }
            branches.push_back(entry);
          }
          out = {{"kind", "l1-exhausted"}, {"branches", branches}};
        }
      },
      cert->node);
  return out;
}

json verdict_json(const Verdict& verdict) {
  return {{"regime", regime_name(verdict.regime)},
          {"min_ell", verdict.min_ell == kLevelInfinite
                          ? json()
                          : json(verdict.min_ell)},
          {"bound", bound_token(verdict.regime, verdict.min_ell)},
          {"bounds_note", verdict.bounds_note},
          {"no_growth", verdict.no_growth},
          {"few_edges", verdict.few_edges},
          {"certificate", cert_json(verdict.certificate)}};
}

json mono_json(const MonoCopy& copy) {
  return {{"to_host", copy.to_host}, {"label", to_json(copy.label)}};
}

json audit_json(const AuditReport& report) {
  json patterns = json::array();
  for (const AuditPattern& p : report.patterns) {
    patterns.push_back({{"key", p.key.hex()},
                        {"pattern", to_json(p.pattern)},
                        {"subset", p.subset},
                        {"label", to_json(p.label)},
                        {"passes", p.passes}});
  }
  return {{"oracle", report.oracle},
          {"predicate", report.predicate_name},
          {"window", {{"lo", report.window_lo}, {"hi", report.window_hi}}},
          {"h_max", report.h_max},
          {"subsets_checked", report.subsets_checked},
          {"all_pass", report.all_pass},
          {"patterns", patterns}};
}

json arrows_json(const ArrowsResult& result) {
  json out = {{"arrows", result.arrows},
              {"n", result.n},
              {"q", result.q},
              {"nodes_explored", result.nodes_explored},
              {"refuted_branches", result.refuted_branches}};
  if (result.arrows) {
    out["avoiding"] = json();
  } else {
    json table = json::array();
    for (size_t i = 0; i < result.triples.size(); ++i) {
      const Triple& t = result.triples[i];
      table.push_back(
          {{"triple", {t[0], t[1], t[2]}}, {"color", result.avoiding[i]}});
    }
    out["avoiding"] = table;
  }
  return out;
}

}  // namespace ramsey3
