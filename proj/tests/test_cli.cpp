// End-to-end command-line checks: pinned output lines, exit codes, and the
// generate/classify round trip, driven through a shell on the built binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ramsey3/classifier.hpp"
#include "ramsey3/constructions.hpp"
#include "ramsey3/hypergraph.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string temp_dir() {
  static std::string dir = [] {
    std::string d = "/tmp/ramsey3-cli-test";
    if (std::system(("mkdir -p " + d).c_str()) != 0) d = "/tmp";
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const std::string out_path = temp_dir() + "/out.txt";
  const std::string command = std::string(RAMSEY3_CLI_PATH) + " " + args +
                              " > " + out_path + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.out = buffer.str();
  return result;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("classify prints the pinned verdict line") {
  REQUIRE(run("gen fano -o " + temp_dir() + "/fano.h3").exit_code == 0);
  const RunResult result = run("classify " + temp_dir() + "/fano.h3");
  CHECK(result.exit_code == 0);
  CHECK(first_line(result.out) ==
        "regime=SingleExpZone min_ell=2 bound=2^{O(q^2 log q)}");
}

TEST_CASE("color prints the pinned stepping-up value") {
  const RunResult result = run("color --oracle phi-q:q=4 --triple 1 4 6");
  CHECK(result.exit_code == 0);
  CHECK(first_line(result.out) == "(1,1)");
}

TEST_CASE("missing files are usage errors") {
  CHECK(run("classify " + temp_dir() + "/nosuchfile.h3").exit_code == 2);
}

TEST_CASE("unknown verbs and flags are usage errors") {
  CHECK(run("transmogrify").exit_code == 2);
  CHECK(run("classify").exit_code == 2);              // missing argument
  CHECK(run("color --oracle phi-q:q=4").exit_code == 2);
  CHECK(run("color --oracle phi-q:q=7 --triple 1 4 6").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("generation round-trips through classification") {
  using namespace ramsey3;
  for (const std::string name : {"fig2", "blowup_example"}) {
    const std::string path = temp_dir() + "/" + name + ".h3";
    REQUIRE(run("gen " + name + " -o " + path).exit_code == 0);
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const Hypergraph3 parsed = parse_hypergraph(buffer.str()).graph;
    GeneratorSpec spec;
    spec.name = name;
    CHECK(parsed == generate(spec));
    // The file classifies exactly like the in-memory graph.
    const Verdict direct = classify(parsed);
    const RunResult via_cli = run("classify " + path);
    CHECK(via_cli.exit_code == 0);
    const std::string expect_ell =
        direct.min_ell == kLevelInfinite ? "infinity"
                                         : std::to_string(direct.min_ell);
    CHECK(first_line(via_cli.out).find("min_ell=" + expect_ell) !=
          std::string::npos);
  }
}

TEST_CASE("generator parameters flow through flags") {
  const std::string path = temp_dir() + "/chain2.h3";
  REQUIRE(run("gen g_chain --i 2 -o " + path).exit_code == 0);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(ramsey3::parse_hypergraph(buffer.str()).graph ==
        ramsey3::g_chain(2));

  // Same seed, same random graph.
  const RunResult a = run("--seed 11 gen random --n 8 --p 1/2");
  const RunResult b = run("--seed 11 gen random --n 8 --p 1/2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(run("gen random --n 8 --p half").exit_code == 2);
}

TEST_CASE("search distinguishes found from absent") {
  const std::string star = temp_dir() + "/star4.h3";
  const std::string k4 = temp_dir() + "/k4.h3";
  REQUIRE(run("gen star --h 4 -o " + star).exit_code == 0);
  REQUIRE(run("gen clique --n 4 -o " + k4).exit_code == 0);

  const RunResult absent = run("search --oracle phi-q:q=4 --pattern " + k4 +
                               " --window 0:16");
  CHECK(absent.exit_code == 1);
  CHECK(first_line(absent.out) == "absent");

  const RunResult found = run("search --oracle phi-q:q=4 --pattern " + star +
                              " --window 0:16");
  CHECK(found.exit_code == 0);
  CHECK(found.out.find("monochromatic copy") != std::string::npos);

  CHECK(run("search --oracle phi-q:q=4 --pattern " + k4 +
            " --window 16:0")
            .exit_code == 2);
}

TEST_CASE("audit exit codes follow the verdict") {
  CHECK(run("audit --oracle phi-q:q=4 --window 0:16 --h-max 4 "
            "--predicate in-U")
            .exit_code == 0);
  CHECK(run("audit --oracle phi-q:q=4 --window 0:16 --h-max 4 "
            "--predicate tripartite")
            .exit_code == 1);
  CHECK(run("audit --oracle phi-q:q=4 --window 0:16 --h-max 4 "
            "--predicate half-full")
            .exit_code == 2);
}

TEST_CASE("bound subcommands print exact decimals") {
  const RunResult tower16 = run("bound tower --k 3 --x 2");
  CHECK(tower16.exit_code == 0);
  CHECK(first_line(tower16.out) == "16");
  const RunResult big = run("bound upper --q 2 --h 4 --ell 1 --t 8");
  CHECK(big.exit_code == 0);
  // 2^384 has 116 decimal digits and starts with 39402.
  CHECK(first_line(big.out).size() == 116);
  CHECK(first_line(big.out).substr(0, 5) == "39402");
}

TEST_CASE("arrows reports the decision in its exit code") {
  const std::string star = temp_dir() + "/star4.h3";
  REQUIRE(run("gen star --h 4 -o " + star).exit_code == 0);
  CHECK(run("arrows --pattern " + star + " --n 7 --q 2").exit_code == 0);
  CHECK(run("arrows --pattern " + star + " --n 6 --q 2").exit_code == 1);
  const RunResult least =
      run("arrows --pattern " + star + " --find-least --cap 7 --q 2");
  CHECK(least.exit_code == 0);
  CHECK(first_line(least.out) == "least n: 7");
  CHECK(run("arrows --pattern " + star + " --find-least --cap 6 --q 2")
            .exit_code == 1);
}

TEST_CASE("suite runs and writes reports") {
  const RunResult paper = run("suite paper");
  CHECK(paper.exit_code == 0);
  CHECK(paper.out.find("[PASS]") != std::string::npos);
  CHECK(paper.out.find("[FAIL]") == std::string::npos);

  const std::string json_path = temp_dir() + "/suite.json";
  CHECK(run("suite paper --json " + json_path).exit_code == 0);
  std::ifstream in(json_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("budget exhaustion is its own exit code") {
  const std::string k4 = temp_dir() + "/k4.h3";
  REQUIRE(run("gen clique --n 4 -o " + k4).exit_code == 0);
  CHECK(run("--budget 2 classify " + k4).exit_code == 3);
  CHECK(run("bound tower --k 6 --x 2").exit_code == 3);
}

TEST_CASE("json output modes emit parseable objects") {
  const std::string path = temp_dir() + "/fano.h3";
  REQUIRE(run("gen fano -o " + path).exit_code == 0);
  const RunResult verdict = run("classify --json " + path);
  CHECK(verdict.exit_code == 0);
  CHECK(first_line(verdict.out) == "{");
  CHECK(verdict.out.find("\"regime\": \"SingleExpZone\"") !=
        std::string::npos);
  const RunResult label = run("color --json --oracle phi-q:q=4 --triple 1 4 6");
  CHECK(label.out.find("\"kind\": \"pair\"") != std::string::npos);
}
