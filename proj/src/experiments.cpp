#include "ramsey3/experiments.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ramsey3/analysis.hpp"
#include "ramsey3/canonical.hpp"
#include "ramsey3/classifier.hpp"
#include "ramsey3/colorings.hpp"
#include "ramsey3/constructions.hpp"
#include "ramsey3/json_io.hpp"
#include "ramsey3/rng.hpp"

namespace ramsey3 {

namespace {

using nlohmann::json;

std::string fmt_set(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string fmt_level(int ell) {
  return ell == kLevelInfinite ? "infinity" : std::to_string(ell);
}

class CaseSink {
 public:
  explicit CaseSink(SuiteReport& report) : report_(report) {}

  // Runs one case; an exception becomes a failing entry, not an abort.
  void run(const std::string& name, const std::string& expected,
           const std::function<std::pair<std::string, json>(bool&)>& body) {
    SuiteCase entry;
    entry.name = name;
    entry.expected = expected;
    try {
      bool ok = true;
      auto [observed, detail] = body(ok);
      entry.observed = observed;
      entry.detail = std::move(detail);
      entry.pass = ok;
    } catch (const std::exception& e) {
      entry.observed = std::string("error: ") + e.what();
      entry.pass = false;
    }
    report_.all_pass = report_.all_pass && entry.pass;
    report_.cases.push_back(std::move(entry));
  }

 private:
  SuiteReport& report_;
};

// Classification case: value match plus certificate re-validation.
void level_case(CaseSink& sink, const std::string& name, const Hypergraph3& g,
                int expected_ell, const Limits& limits) {
  sink.run(name, "min level " + fmt_level(expected_ell), [&](bool& ok) {
    const Verdict verdict = classify(g, limits);
    std::string diagnostic;
    const bool sound = check_certificate(g, verdict, &diagnostic, limits);
    ok = verdict.min_ell == expected_ell && sound;
    std::string observed = "min level " + fmt_level(verdict.min_ell) +
                           (sound ? ", certificate validates"
                                  : ", certificate rejected: " + diagnostic);
    return std::make_pair(observed, verdict_json(verdict));
  });
}

}  // namespace

SuiteReport run_paper_suite(const Limits& limits) {
  SuiteReport report;
  report.suite = "paper";
  report.budget = limits.budget;
  CaseSink sink(report);

  const Hypergraph3 star4 = star3(4);
  const Hypergraph3 k4 = clique3(4);
  const Hypergraph3 fano_g = fano();
  const Hypergraph3 fig2_g = fig2();

  sink.run("induced-fano-edge", "single edge on 3 vertices", [&](bool& ok) {
    const Hypergraph3 sub = induced(fano_g, {0, 1, 2});
    ok = sub.vertex_count() == 3 && sub.edge_count() == 1 &&
         sub.edges()[0] == Triple{0, 1, 2};
    return std::make_pair(std::to_string(sub.vertex_count()) + " vertices, " +
                              std::to_string(sub.edge_count()) + " edge(s)",
                          to_json(sub));
  });

  sink.run("star4-not-tripartite", "no tripartition", [&](bool& ok) {
    const auto parts = is_tripartite(star4, limits);
    ok = !parts.has_value();
    return std::make_pair(
        parts ? "tripartition found" : std::string("no tripartition"), json());
  });

  sink.run("star4-transversal", "{0}", [&](bool& ok) {
    const auto hitting = exact_transversal(star4, limits);
    ok = hitting.has_value() && *hitting == std::vector<int>{0} &&
         check_transversal_witness(star4, *hitting);
    return std::make_pair(hitting ? fmt_set(*hitting) : "absent",
                          json(hitting ? json(*hitting) : json()));
  });

  sink.run("k4-no-transversal", "absent", [&](bool& ok) {
    const auto hitting = exact_transversal(k4, limits);
    ok = !hitting.has_value();
    return std::make_pair(hitting ? fmt_set(*hitting) : "absent", json());
  });

  sink.run("k4-no-collapsible-set", "0 sets", [&](bool& ok) {
    const auto sets = collapsible_sets(k4, limits);
    ok = sets.empty();
    return std::make_pair(std::to_string(sets.size()) + " sets", json(sets));
  });

  sink.run("fig2-collapsible-sets", "exactly [{0,1}]", [&](bool& ok) {
    const auto sets = collapsible_sets(fig2_g, limits);
    ok = sets.size() == 1 && sets[0] == std::vector<int>{0, 1};
    std::string observed;
    for (const auto& s : sets) observed += fmt_set(s);
    return std::make_pair(observed.empty() ? "none" : observed, json(sets));
  });

  sink.run("fano-lines-collapsible", "all 7 lines collapsible", [&](bool& ok) {
    const auto sets = collapsible_sets(fano_g, limits);
    int lines_found = 0;
    for (const Triple& e : fano_g.edges()) {
      const std::vector<int> u(e.begin(), e.end());
      lines_found += std::count(sets.begin(), sets.end(), u) > 0;
    }
    ok = lines_found == fano_g.edge_count();
    return std::make_pair(std::to_string(lines_found) + " of 7 lines among " +
                              std::to_string(sets.size()) +
                              " collapsible sets",
                          json(sets));
  });

  sink.run("fano-collapse-line", "quotient isomorphic to Star3(5)",
           [&](bool& ok) {
             const CollapseOutcome out = collapse(fano_g, {0, 1, 2});
             ok = canonical_key(out.quotient) == canonical_key(star3(5));
             return std::make_pair(
                 ok ? "quotient isomorphic to Star3(5)"
                    : "quotient not isomorphic to Star3(5)",
                 json{{"quotient", to_json(out.quotient)},
                      {"inner", to_json(out.inner)}});
           });

  sink.run("fig2-collapse-ab", "quotient isomorphic to K4(3)", [&](bool& ok) {
    const CollapseOutcome out = collapse(fig2_g, {0, 1});
    ok = canonical_key(out.quotient) == canonical_key(k4);
    return std::make_pair(ok ? "quotient isomorphic to K4(3)"
                             : "quotient not isomorphic to K4(3)",
                          json{{"quotient", to_json(out.quotient)},
                               {"inner", to_json(out.inner)}});
  });

  sink.run("gchain2-decompose-apex-blocks",
           "quotient = single edge; two blocks isomorphic to g_chain(1)",
           [&](bool& ok) {
             const Hypergraph3 g = g_chain(2);
             OrderedPartition blocks;
             blocks.blocks = {{0}, {1, 2, 3, 4}, {5, 6, 7, 8}};
             const auto dec = decompose(g, blocks, true);
             ok = dec.has_value();
             json detail;
             if (dec) {
               const CanonicalKey chain1 = canonical_key(g_chain(1));
               ok = dec->quotient.edge_count() == 1 &&
                    dec->quotient.vertex_count() == 3 &&
                    dec->parts[0].edge_count() == 0 &&
                    canonical_key(dec->parts[1]) == chain1 &&
                    canonical_key(dec->parts[2]) == chain1;
               detail = {{"quotient", to_json(dec->quotient)},
                         {"blocks", to_json(blocks)}};
             }
             return std::make_pair(
                 dec ? (ok ? std::string("as expected")
                           : std::string("decomposition has wrong shape"))
                     : std::string("blocks not decomposable"),
                 detail);
           });

  sink.run("fig2-decompose-recovers-collapse",
           "decomposition quotient isomorphic to collapse quotient",
           [&](bool& ok) {
             OrderedPartition blocks;
             blocks.blocks = {{0, 1}, {2}, {3}, {4}};
             const auto dec = decompose(fig2_g, blocks, true);
             ok = dec.has_value() &&
                  canonical_key(dec->quotient) ==
                      canonical_key(collapse(fig2_g, {0, 1}).quotient);
             return std::make_pair(
                 ok ? std::string("quotients agree up to relabeling")
                    : std::string("quotients differ"),
                 dec ? json{{"quotient", to_json(dec->quotient)}} : json());
           });

  sink.run("steiner3-forward-partition",
           "forward-colorable; highest-bit partition validates",
           [&](bool& ok) {
             const Hypergraph3 g = steiner_f2(3);
             const OrderedPartition p = steiner_forward_partition(3);
             const auto witness = forward_colorable(g, limits);
             ok = witness.has_value() && check_forward_witness(g, p);
             return std::make_pair(
                 std::string(witness ? "forward-colorable" : "not forward") +
                     (check_forward_witness(g, p)
                          ? ", highest-bit partition validates"
                          : ", highest-bit partition rejected"),
                 json{{"search_witness", witness ? to_json(*witness) : json()},
                      {"highest_bit_partition", to_json(p)}});
           });

  level_case(sink, "min-level-star4", star4, 1, limits);
  level_case(sink, "min-level-fano", fano_g, 2, limits);
  level_case(sink, "min-level-k4", k4, kLevelInfinite, limits);
  level_case(sink, "min-level-fig2", fig2_g, kLevelInfinite, limits);
  level_case(sink, "min-level-gchain2", g_chain(2), 2, limits);

  sink.run("classify-fano", "SingleExpZone, min level 2", [&](bool& ok) {
    const Verdict verdict = classify(fano_g, limits);
    std::string diagnostic;
    ok = verdict.regime == Regime::SingleExpZone && verdict.min_ell == 2 &&
         check_certificate(fano_g, verdict, &diagnostic, limits);
    return std::make_pair(regime_name(verdict.regime) + ", min level " +
                              fmt_level(verdict.min_ell),
                          verdict_json(verdict));
  });

  sink.run("classify-k4", "DoubleExp", [&](bool& ok) {
    const Verdict verdict = classify(k4, limits);
    std::string diagnostic;
    ok = verdict.regime == Regime::DoubleExp &&
         check_certificate(k4, verdict, &diagnostic, limits);
    return std::make_pair(regime_name(verdict.regime), verdict_json(verdict));
  });

  sink.run("blowup-outside-closure", "not a closure member", [&](bool& ok) {
    const Hypergraph3 g = blowup_example();
    const auto [member, cert] = l1_member(g, limits);
    std::string diagnostic;
    ok = !member && check_l1_certificate(g, member, cert, &diagnostic, limits);
    return std::make_pair(
        std::string(member ? "member" : "not a member") +
            (ok ? ", certificate validates" : ", check failed: " + diagnostic),
        cert_json(cert));
  });

  sink.run("steiner3-in-closure", "closure member", [&](bool& ok) {
    const Hypergraph3 g = steiner_f2(3);
    const auto [member, cert] = l1_member(g, limits);
    std::string diagnostic;
    ok = member && check_l1_certificate(g, member, cert, &diagnostic, limits);
    return std::make_pair(
        std::string(member ? "member" : "not a member") +
            (ok ? ", certificate validates" : ", check failed: " + diagnostic),
        cert_json(cert));
  });

  sink.run("delta-low-pairs", "delta(0,1) = 0 and delta(6,7) = 0",
           [&](bool& ok) {
             const int a = delta(0, 1), b = delta(6, 7);
             ok = a == 0 && b == 0;
             return std::make_pair("delta(0,1) = " + std::to_string(a) +
                                       ", delta(6,7) = " + std::to_string(b),
                                   json());
           });

  sink.run("delta-high-pairs", "delta(3,4) = 2 and delta(2,7) = 2",
           [&](bool& ok) {
             const int a = delta(3, 4), b = delta(2, 7);
             ok = a == 2 && b == 2;
             return std::make_pair("delta(3,4) = " + std::to_string(a) +
                                       ", delta(2,7) = " + std::to_string(b),
                                   json());
           });

  sink.run("delta-middle-pair", "delta(5,6) = 1", [&](bool& ok) {
    const int a = delta(5, 6);
    ok = a == 1;
    return std::make_pair("delta(5,6) = " + std::to_string(a), json());
  });

  sink.run("phi-spot-146", "(1,1)", [&](bool& ok) {
    const ColorLabel got = PhiColoring(6).eval(1, 4, 6);
    ok = got == ColorLabel::pair(1, 1);
    return std::make_pair(got.to_string(), to_json(got));
  });

  sink.run("generate-fig2", "5 vertices, edges 023 024 123 134 234",
           [&](bool& ok) {
             const Hypergraph3 g = generate(GeneratorSpec{"fig2", {}});
             const std::vector<Triple> expected = {
                 Triple{0, 2, 3}, Triple{0, 2, 4}, Triple{1, 2, 3},
                 Triple{1, 3, 4}, Triple{2, 3, 4}};
             ok = g.vertex_count() == 5 && g.edges() == expected;
             std::string observed =
                 std::to_string(g.vertex_count()) + " vertices, edges";
             for (const Triple& e : g.edges()) {
               observed += " " + std::to_string(e[0]) + std::to_string(e[1]) +
                           std::to_string(e[2]);
             }
             return std::make_pair(observed, to_json(g));
           });

  return report;
}

SuiteReport random_classification_experiment(int n, int c_num, int samples,
                                             uint64_t seed,
                                             const Limits& limits) {
  if (n < 3 || n > 16) {
    throw DomainError("random experiment: n must be in [3, 16]");
  }
  if (c_num < 0) throw DomainError("random experiment: negative C");
  if (samples < 1) throw DomainError("random experiment: needs samples >= 1");
  SuiteReport report;
  report.suite = "random";
  report.seed = seed;
  report.budget = limits.budget;
  CaseSink sink(report);

  const uint64_t den = static_cast<uint64_t>(n) * n;
  const uint64_t num = std::min<uint64_t>(c_num, den);
  int infinite = 0, classified = 0;
  int width = 1;
  for (int s = samples; s >= 10; s /= 10) ++width;
  for (int i = 0; i < samples; ++i) {
    std::ostringstream name;
    name << "sample-";
    name.width(width);
    name.fill('0');
    name << i;
    sink.run(name.str(), "verdict with validating certificate", [&](bool& ok) {
      const Hypergraph3 g = random_g3(n, num, den, mix_seed(seed, i));
      try {
        const Verdict verdict = classify(g, limits);
        std::string diagnostic;
        ok = check_certificate(g, verdict, &diagnostic, limits);
        ++classified;
        infinite += verdict.min_ell == kLevelInfinite;
        return std::make_pair(
            regime_name(verdict.regime) + ", min level " +
                fmt_level(verdict.min_ell) +
                (ok ? ", certificate validates"
                    : ", check failed: " + diagnostic),
            json{{"graph", to_json(g)}, {"verdict", verdict_json(verdict)}});
      } catch (const BudgetExceeded& e) {
        ok = true;  // recorded, not fatal
        return std::make_pair(std::string("budget exceeded: ") + e.what(),
                              json{{"graph", to_json(g)}});
      }
    });
  }
  sink.run("fraction-no-finite-level", "reported, not asserted",
           [&](bool& ok) {
             ok = true;
             return std::make_pair(std::to_string(infinite) + "/" +
                                       std::to_string(classified) +
                                       " classified samples",
                                   json{{"infinite", infinite},
                                        {"classified", classified},
                                        {"samples", samples}});
           });
  return report;
}

nlohmann::json suite_json(const SuiteReport& report) {
  json cases = json::array();
  for (const SuiteCase& c : report.cases) {
    cases.push_back({{"name", c.name},
                     {"expected", c.expected},
                     {"observed", c.observed},
                     {"pass", c.pass},
                     {"detail", c.detail}});
  }
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"budget", report.budget},
          {"all_pass", report.all_pass},
          {"cases", cases}};
}

}  // namespace ramsey3
