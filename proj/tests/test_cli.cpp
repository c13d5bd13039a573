#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "steiner/families.hpp"
#include "steiner/graph6.hpp"

// End-to-end checks of the installed binary: every assertion goes through the
// real argv/stdin/stdout surface.  The binary path comes from the build system
// (overridable through STEINERDIAM_BIN).

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string binary() {
  if (const char* env = std::getenv("STEINERDIAM_BIN")) return env;
#ifdef STEINERDIAM_BIN_PATH
  return STEINERDIAM_BIN_PATH;
#else
  return "steinerdiam";
#endif
}

// Runs a shell command, captures stdout, discards stderr.
RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// printf %s\n per line, piped into the binary with the given arguments.
RunResult feed(const std::vector<std::string>& lines, const std::string& args) {
  std::string cmd = "printf '%s\\n'";
  for (const auto& l : lines) cmd += " '" + l + "'";
  return run(cmd + " | '" + binary() + "' " + args);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string family_line(steiner::Family f, int a, int b, int c, int d, int n) {
  steiner::FamilyParams p;
  p.family = f;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  p.n = n;
  return steiner::encode_graph6(steiner::generate_family(p));
}

}  // namespace

TEST_CASE("compute emits one record per input line") {
  auto r = feed({"DhC"}, "compute --metric sdiam --k 4");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"index\":0,\"n\":5,\"k\":4,\"metric\":\"sdiam\",\"value\":4}\n");

  r = feed({"DhC", "EhEG"}, "compute --metric sdiam --k 4");
  CHECK(r.status == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("\"index\":0") != std::string::npos);
  CHECK(lines[1].find("\"index\":1") != std::string::npos);
  CHECK(lines[1].find("\"n\":6") != std::string::npos);
  CHECK(lines[1].find("\"value\":4") != std::string::npos);
}

TEST_CASE("compute formats the exact average as a fraction") {
  auto r = feed({"Cl"}, "compute --metric avg --k 3");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"index\":0,\"n\":4,\"k\":3,\"metric\":\"avg\",\"value\":\"2/1\"}\n");
}

TEST_CASE("compute reports per-line errors and exits 2") {
  auto r = feed({"DhC", "not-a-graph", "EhEG"}, "compute --metric sdiam --k 4");
  CHECK(r.status == 2);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].find("\"value\":4") != std::string::npos);
  CHECK(lines[1].find("\"error\"") != std::string::npos);
  CHECK(lines[2].find("\"value\":4") != std::string::npos);
}

TEST_CASE("a leading format header is stripped") {
  auto r = feed({">>graph6<<DhC", "EhEG"}, "compute --metric sdiam --k 4");
  CHECK(r.status == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("\"n\":5") != std::string::npos);
}

TEST_CASE("classify emits the full verdict record") {
  auto r = feed({"Dhc"}, "classify");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"index\":0,\"graph6\":\"Dhc\",\"n\":5,\"min_degree\":2,\"sdiam4\":3,"
        "\"value_is_3\":true,\"value_is_4\":false,\"value_is_nminus1\":false,"
        "\"consistent\":true}\n");

  r = feed({"Cl"}, "classify");  // order 4: below the classifier's range
  CHECK(r.status == 2);
  CHECK(r.out.find("\"error\"") != std::string::npos);
}

TEST_CASE("verify prints a summary and exits clean on sound input") {
  auto r = feed({"DhC", "EhEG"}, "verify --which all");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"graphs_processed\":2,\"counterexamples\":0}\n");

  r = feed({"EhEG"}, "verify --which lemma1 --k 3");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"graphs_processed\":1,\"counterexamples\":0}\n");

  // No connected graph can honestly produce exit 1 here: a mismatch record
  // would be a disproof of an exact characterization.  Malformed lines take
  // the error path instead.
  r = feed({"zzz*"}, "verify --which thm2");
  CHECK(r.status == 2);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("\"error\"") != std::string::npos);
  CHECK(lines[1] == "{\"graphs_processed\":0,\"counterexamples\":0}");
}

TEST_CASE("generate emits one member or a deduplicated sweep") {
  auto r = run("'" + binary() + "' generate --family T --n 6 --params 0,0,0,0");
  CHECK(r.status == 0);
  CHECK(r.out == "EhCG\n");

  r = run("'" + binary() + "' generate --family H3 --n 5 --params 0,1");
  CHECK(r.status == 0);
  CHECK(r.out == family_line(steiner::Family::H3, 0, 1, 0, 0, 5) + "\n");

  // Sweep output must match the library's sweep order with exact duplicates
  // removed, first occurrence kept.
  r = run("'" + binary() + "' generate --family G2 --n 5 --sweep");
  CHECK(r.status == 0);
  std::vector<std::string> expected;
  for (const auto& p : steiner::sweep_params(steiner::Family::G2, 5)) {
    std::string line = steiner::encode_graph6(steiner::generate_family(p));
    if (std::find(expected.begin(), expected.end(), line) == expected.end())
      expected.push_back(line);
  }
  CHECK(split_lines(r.out) == expected);
  CHECK(expected.size() == 4);
}

TEST_CASE("generate rejects bad requests") {
  const std::string b = "'" + binary() + "'";
  CHECK(run(b + " generate --family H3 --n 5 --params 0,0").status == 2);   // b >= 1
  CHECK(run(b + " generate --family H3 --n 5 --params 0,1,0").status == 2); // arity
  CHECK(run(b + " generate --family H3 --n 5").status == 2);                // neither
  CHECK(run(b + " generate --family H3 --n 5 --params 0,1 --sweep").status == 2);
  CHECK(run(b + " generate --family NOPE --n 5 --params 0,1").status == 2);
}

TEST_CASE("oracle answers plainly") {
  auto r = feed({"C`"}, "oracle --terminals 0,2");
  CHECK(r.status == 0);
  CHECK(r.out == "unreachable\n");

  r = feed({"EhEG"}, "oracle --terminals 0,1,3");
  CHECK(r.status == 0);
  CHECK(r.out == "3\n");

  r = feed({"DhC"}, "oracle --terminals 0,4");
  CHECK(r.status == 0);
  CHECK(r.out == "4\n");

  // The order cap is configuration: tightening it makes the same input fail.
  r = feed({"DhC"}, "oracle --terminals 0,4 --max-oracle-n 4");
  CHECK(r.status == 2);
}

TEST_CASE("stdout is byte-identical at any worker count") {
  const std::string corpus = "/tmp/steinerdiam_cli_corpus.g6";
  {
    std::ofstream out(corpus);
    for (const auto& p : steiner::sweep_params(steiner::Family::T, 8))
      out << steiner::encode_graph6(steiner::generate_family(p)) << '\n';
    for (const auto& p : steiner::sweep_params(steiner::Family::G3, 7))
      out << steiner::encode_graph6(steiner::generate_family(p)) << '\n';
  }
  const std::string b = "'" + binary() + "'";
  auto one = run(b + " compute --input " + corpus + " --metric srad --k 3 --jobs 1");
  auto many = run(b + " compute --input " + corpus + " --metric srad --k 3 --jobs 4");
  CHECK(one.status == 0);
  CHECK(many.status == 0);
  CHECK(one.out == many.out);
  std::size_t n_inputs = 0;
  {
    std::ifstream in(corpus);
    std::string line;
    while (std::getline(in, line)) ++n_inputs;
  }
  CHECK(split_lines(one.out).size() == n_inputs);

  auto c1 = run(b + " classify --input " + corpus + " --jobs 1");
  auto c7 = run(b + " classify --input " + corpus + " --jobs 7");
  CHECK(c1.status == 0);
  CHECK(c1.out == c7.out);
  std::remove(corpus.c_str());
}

TEST_CASE("usage errors and help") {
  const std::string b = "'" + binary() + "'";
  auto help = run(b + " --help");
  CHECK(help.status == 0);
  CHECK(help.out.find("compute") != std::string::npos);
  CHECK(run(b).status == 2);                                  // missing subcommand
  CHECK(run(b + " frobnicate").status == 2);                  // unknown subcommand
  CHECK(run(b + " compute --metric bogus").status == 2);      // bad enum value
  CHECK(run(b + " verify < /dev/null").status == 2);          // missing --which
  CHECK(run(b + " compute --input /nonexistent/file").status == 2);
}
