// Command-line front end: classify, gen, color, search, audit, bound,
// arrows, suite.  Exit codes: 0 success, 1 negative decision, 2 usage or
// domain error, 3 budget or cap exceeded.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ramsey3/analysis.hpp"
#include "ramsey3/bounds.hpp"
#include "ramsey3/classifier.hpp"
#include "ramsey3/colorings.hpp"
#include "ramsey3/constructions.hpp"
#include "ramsey3/experiments.hpp"
#include "ramsey3/json_io.hpp"
#include "ramsey3/hypergraph.hpp"

namespace {

using namespace ramsey3;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

Hypergraph3 load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str()).graph;
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << body;
  if (!body.empty() && body.back() != '\n') out << '\n';
}

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw DomainError("window must be LO:HI, got '" + text + "'");
  }
  try {
    size_t a = 0, b = 0;
    Window w{std::stoull(text.substr(0, colon), &a),
             std::stoull(text.substr(colon + 1), &b)};
    if (a != colon || b != text.size() - colon - 1) {
      throw std::invalid_argument(text);
    }
    return w;
  } catch (const std::exception&) {
    throw DomainError("window must be LO:HI, got '" + text + "'");
  }
}

std::string fmt_ell(int ell) {
  return ell == kLevelInfinite ? "infinity" : std::to_string(ell);
}

uint64_t default_budget() {
  const Limits defaults;
  if (const char* env = std::getenv("RAMSEY3_BUDGET")) {
    try {
      size_t used = 0;
      const std::string text(env);
      const uint64_t value = std::stoull(text, &used);
      if (used == text.size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid RAMSEY3_BUDGET='" << env << "'\n";
  }
  return defaults.budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "3-uniform hypergraph Ramsey toolkit: collapse-level classification, "
      "lower-bound colorings, audits, and exact brute-force bounds"};
  app.require_subcommand(1);

  Limits limits;
  limits.budget = default_budget();
  app.add_option("--budget", limits.budget,
                 "node budget for exhaustive searches")
      ->capture_default_str();
  app.add_option("--max-n", limits.max_n,
                 "vertex cap for classification searches")
      ->capture_default_str();
  app.add_option("--threads", limits.threads,
                 "maximum worker threads (engines may use fewer)")
      ->capture_default_str();
  uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized commands");

  std::function<int()> action;

  // ------------------------------------------------------------- classify
  auto* classify_cmd =
      app.add_subcommand("classify", "classify a hypergraph file");
  {
    static std::string path;
    static bool as_json = false, with_l1 = false;
    classify_cmd->add_option("file", path, "hypergraph text file")->required();
    classify_cmd->add_flag("--json", as_json, "emit the JSON verdict");
    classify_cmd->add_flag("--l1", with_l1,
                           "also decide forward-closure membership");
    classify_cmd->callback([&]() {
      action = [&]() {
        const Hypergraph3 g = load_graph(path);
        const Verdict verdict = classify(g, limits);
        std::optional<std::pair<bool, CertPtr>> l1;
        if (with_l1) l1 = l1_member(g, limits);
        if (as_json) {
          json out = verdict_json(verdict);
          if (l1) {
            out["l1"] = {{"member", l1->first},
                         {"certificate", cert_json(l1->second)}};
          }
          std::cout << out.dump(2) << '\n';
          return kOk;
        }
        std::cout << "regime=" << regime_name(verdict.regime)
                  << " min_ell=" << fmt_ell(verdict.min_ell)
                  << " bound=" << bound_token(verdict.regime, verdict.min_ell)
                  << '\n';
        std::cout << "note: " << verdict.bounds_note << '\n';
        if (l1) {
          std::cout << "l1_member=" << (l1->first ? "true" : "false") << '\n';
        }
        return kOk;
      };
    });
  }

  // ------------------------------------------------------------------ gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a named hypergraph");
  {
    static std::string name, out_path, p_text;
    static std::optional<int64_t> h, n, i, m;
    gen_cmd->set_help_flag("--help", "print help");
    gen_cmd->add_option("name", name,
                        "star | clique | fano | fig2 | g_chain | steiner_f2 "
                        "| blowup_example | random")
        ->required();
    gen_cmd->add_option("--h", h, "vertex count (star)");
    gen_cmd->add_option("--n", n, "vertex count (clique, random)");
    gen_cmd->add_option("--i", i, "chain depth (g_chain)");
    gen_cmd->add_option("--m", m, "binary-space dimension (steiner_f2)");
    gen_cmd->add_option("--p", p_text, "edge probability NUM/DEN (random)");
    gen_cmd->add_option("-o,--out", out_path, "output file (default stdout)");
    gen_cmd->callback([&]() {
      action = [&]() {
        GeneratorSpec spec;
        spec.name = name;
        if (h) spec.params["h"] = *h;
        if (n) spec.params["n"] = *n;
        if (i) spec.params["i"] = *i;
        if (m) spec.params["m"] = *m;
        std::string echo = "gen " + name;
        for (const auto& [key, value] : spec.params) {
          echo += " --" + key + " " + std::to_string(value);
        }
        if (!p_text.empty()) {
          const auto slash = p_text.find('/');
          if (slash == std::string::npos) {
            throw DomainError("--p must be NUM/DEN, got '" + p_text + "'");
          }
          try {
            size_t a = 0, b = 0;
            spec.params["p_num"] = static_cast<int64_t>(
                std::stoull(p_text.substr(0, slash), &a));
            spec.params["p_den"] = static_cast<int64_t>(
                std::stoull(p_text.substr(slash + 1), &b));
            if (a != slash || b != p_text.size() - slash - 1) {
              throw std::invalid_argument(p_text);
            }
          } catch (const std::exception&) {
            throw DomainError("--p must be NUM/DEN, got '" + p_text + "'");
          }
          echo += " --p " + p_text;
        }
        if (app.count("--seed")) {
          spec.params["seed"] = static_cast<int64_t>(seed);
          echo += " --seed " + std::to_string(seed);
        }
        const Hypergraph3 g = generate(spec);
        write_output(out_path, format_hypergraph(g, {echo}));
        return kOk;
      };
    });
  }

  // ---------------------------------------------------------------- color
  auto* color_cmd =
      app.add_subcommand("color", "evaluate a coloring oracle on one triple");
  {
    static std::string oracle_spec;
    static std::vector<uint64_t> triple;
    static bool as_json = false;
    color_cmd->add_option("--oracle", oracle_spec, "oracle spec string")
        ->required();
    color_cmd->add_option("--triple", triple, "ascending vertices x y z")
        ->expected(3)
        ->required();
    color_cmd->add_flag("--json", as_json, "emit the JSON label");
    color_cmd->callback([&]() {
      action = [&]() {
        const OraclePtr oracle = parse_oracle(oracle_spec, limits);
        const ColorLabel label =
            oracle->eval(triple[0], triple[1], triple[2]);
        if (as_json) {
          std::cout << to_json(label).dump(2) << '\n';
        } else {
          std::cout << label.to_string() << '\n';
        }
        return kOk;
      };
    });
  }

  // --------------------------------------------------------------- search
  auto* search_cmd = app.add_subcommand(
      "search", "search a coloring for a monochromatic pattern copy");
  {
    static std::string oracle_spec, pattern_path, window_text;
    static bool as_json = false;
    search_cmd->add_option("--oracle", oracle_spec, "oracle spec string")
        ->required();
    search_cmd->add_option("--pattern", pattern_path, "pattern file")
        ->required();
    search_cmd->add_option("--window", window_text,
                           "vertex range LO:HI (default full domain)");
    search_cmd->add_flag("--json", as_json, "emit the JSON result");
    search_cmd->callback([&]() {
      action = [&]() {
        const OraclePtr oracle = parse_oracle(oracle_spec, limits);
        const Hypergraph3 pattern = load_graph(pattern_path);
        const Window window = window_text.empty()
                                  ? Window{0, oracle->domain_size()}
                                  : parse_window(window_text);
        const auto copy = find_mono_copy(*oracle, pattern, window, limits);
        if (as_json) {
          std::cout << (copy ? mono_json(*copy) : json()).dump(2) << '\n';
        } else if (copy) {
          std::cout << "monochromatic copy at";
          for (const uint64_t v : copy->to_host) std::cout << ' ' << v;
          std::cout << " with label " << copy->label.to_string() << '\n';
        } else {
          std::cout << "absent\n";
        }
        return copy ? kOk : kNegative;
      };
    });
  }

  // ---------------------------------------------------------------- audit
  auto* audit_cmd = app.add_subcommand(
      "audit", "check every monochromatic pattern of a coloring against a "
               "predicate");
  {
    static std::string oracle_spec, window_text, predicate;
    static int h_max = 4;
    static bool as_json = false;
    audit_cmd->add_option("--oracle", oracle_spec, "oracle spec string")
        ->required();
    audit_cmd->add_option("--window", window_text,
                          "vertex range LO:HI (default full domain)");
    audit_cmd->add_option("--h-max", h_max, "largest subset size")
        ->capture_default_str();
    audit_cmd
        ->add_option("--predicate", predicate,
                     "in-U | in-L1 | tripartite | at-most-one-edge")
        ->required();
    audit_cmd->add_flag("--json", as_json, "emit the JSON report");
    audit_cmd->callback([&]() {
      action = [&]() {
        const OraclePtr oracle = parse_oracle(oracle_spec, limits);
        const Window window = window_text.empty()
                                  ? Window{0, oracle->domain_size()}
                                  : parse_window(window_text);
        const AuditReport report =
            audit_coloring(*oracle, window, h_max, predicate, limits);
        if (as_json) {
          std::cout << audit_json(report).dump(2) << '\n';
        } else {
          std::cout << "oracle " << report.oracle << ": "
                    << report.subsets_checked << " subsets, "
                    << report.patterns.size() << " distinct patterns, "
                    << (report.all_pass ? "all satisfy '" : "violations of '")
                    << predicate << "'\n";
          for (const AuditPattern& p : report.patterns) {
            if (!p.passes) {
              std::cout << "  violation: " << p.pattern.vertex_count()
                        << " vertices, " << p.pattern.edge_count()
                        << " edges, label " << p.label.to_string() << '\n';
            }
          }
        }
        return report.all_pass ? kOk : kNegative;
      };
    });
  }

  // ---------------------------------------------------------------- bound
  auto* bound_cmd =
      app.add_subcommand("bound", "evaluate exact bound formulas");
  bound_cmd->require_subcommand(1);
  {
    auto* tower_cmd = bound_cmd->add_subcommand("tower", "tw_k(x)");
    static int tower_k = 1;
    static uint64_t tower_x = 0;
    tower_cmd->add_option("--k", tower_k, "height")->required();
    tower_cmd->add_option("--x", tower_x, "base argument")->required();
    tower_cmd->callback([&]() {
      action = [&]() {
        std::cout << tower(tower_k, tower_x, limits).str() << '\n';
        return kOk;
      };
    });

    auto* upper_cmd =
        bound_cmd->add_subcommand("upper", "(qh)^{q^{ell-1} h^{2 ell} t}");
    upper_cmd->set_help_flag("--help", "print help");
    static int uq = 1, uh = 3, uell = 1, ut = 1;
    upper_cmd->add_option("--q", uq, "colors")->required();
    upper_cmd->add_option("--h", uh, "pattern vertices")->required();
    upper_cmd->add_option("--ell", uell, "collapse level")->required();
    upper_cmd->add_option("--t", ut, "edge count")->required();
    upper_cmd->callback([&]() {
      action = [&]() {
        std::cout << upper_bound_value(uq, uh, uell, ut, limits).str() << '\n';
        return kOk;
      };
    });
  }

  // --------------------------------------------------------------- arrows
  auto* arrows_cmd = app.add_subcommand(
      "arrows", "decide whether every coloring of K_n forces a "
                "monochromatic pattern copy");
  {
    static std::string pattern_path;
    static int arrows_n = -1, arrows_q = 2, cap = 8;
    static bool as_json = false, find_least = false;
    arrows_cmd->add_option("--pattern", pattern_path, "pattern file")
        ->required();
    arrows_cmd->add_option("--n", arrows_n, "complete hypergraph size");
    arrows_cmd->add_option("--q", arrows_q, "color count")
        ->capture_default_str();
    arrows_cmd->add_flag("--find-least", find_least,
                         "search the least n that arrows (needs --cap)");
    arrows_cmd->add_option("--cap", cap, "largest n to try with --find-least")
        ->capture_default_str();
    arrows_cmd->add_flag("--json", as_json, "emit the JSON result");
    arrows_cmd->callback([&]() {
      action = [&]() {
        const Hypergraph3 pattern = load_graph(pattern_path);
        if (find_least) {
          const auto least = ramsey_exact(pattern, arrows_q, cap, limits);
          if (as_json) {
            std::cout << json{{"q", arrows_q},
                              {"cap", cap},
                              {"least_n", least ? json(*least) : json()}}
                             .dump(2)
                      << '\n';
          } else if (least) {
            std::cout << "least n: " << *least << '\n';
          } else {
            std::cout << "no n <= " << cap << " arrows\n";
          }
          return least ? kOk : kNegative;
        }
        if (arrows_n < 0) {
          throw DomainError("arrows: give --n, or --find-least with --cap");
        }
        const ArrowsResult result = arrows(arrows_n, pattern, arrows_q, limits);
        if (as_json) {
          std::cout << arrows_json(result).dump(2) << '\n';
        } else if (result.arrows) {
          std::cout << "arrows: every " << result.q << "-coloring of K_"
                    << result.n << " contains a monochromatic copy (nodes="
                    << result.nodes_explored << ")\n";
        } else {
          std::cout << "does not arrow: avoiding coloring found (nodes="
                    << result.nodes_explored << "); rerun with --json for "
                    << "the coloring table\n";
        }
        return result.arrows ? kOk : kNegative;
      };
    });
  }

  // ---------------------------------------------------------------- suite
  auto* suite_cmd = app.add_subcommand("suite", "run a scripted experiment");
  {
    static std::string which, json_path;
    static int sn = 14, sc = 20, samples = 100;
    suite_cmd->add_option("which", which, "paper | random")->required();
    suite_cmd
        ->add_option("--json", json_path,
                     "write the JSON report here ('-' = stdout)")
        ->expected(0, 1);
    suite_cmd->add_option("--n", sn, "vertex count (random)")
        ->capture_default_str();
    suite_cmd->add_option("--C", sc, "probability numerator C of C/n^2")
        ->capture_default_str();
    suite_cmd->add_option("--samples", samples, "sample count (random)")
        ->capture_default_str();
    suite_cmd->callback([&]() {
      action = [&]() {
        SuiteReport report;
        if (which == "paper") {
          report = run_paper_suite(limits);
        } else if (which == "random") {
          report = random_classification_experiment(sn, sc, samples, seed,
                                                    limits);
        } else {
          throw DomainError("suite must be 'paper' or 'random', got '" +
                            which + "'");
        }
        // Keep stdout machine-readable when the JSON report goes there.
        const bool json_to_stdout =
            suite_cmd->count("--json") && (json_path.empty() || json_path == "-");
        std::ostream& text = json_to_stdout ? std::cerr : std::cout;
        for (const SuiteCase& c : report.cases) {
          text << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": "
               << c.observed << '\n';
        }
        text << (report.all_pass ? "all " : "FAILURES among ")
             << report.cases.size() << " cases\n";
        if (suite_cmd->count("--json")) {
          const std::string body = suite_json(report).dump(2);
          write_output(json_path.empty() ? "-" : json_path, body);
        }
        return report.all_pass ? kOk : kNegative;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
