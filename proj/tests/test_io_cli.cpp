#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hsg/clifford.hpp"
#include "hsg/constructions.hpp"
#include "hsg/hyperspace.hpp"
#include "hsg/io.hpp"

using namespace hsg;

namespace {

const char* kCli = HSG_CLI_PATH;
const char* kCorpus = HSG_CORPUS_DIR;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(kCli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) { return std::string(kCorpus) + "/" + name; }

std::string temp_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/hsg-tests-XXXXXX";
    const char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

const std::vector<std::string> kCorpusNames = {
    "z1",    "z2", "z3",      "z4",          "klein",  "s3",
    "2chain", "e3", "z2_zero", "brandt_z1_2", "hol_e3"};

}  // namespace

TEST_CASE("corpus files are canonical: parse then serialize is the identity") {
  for (const auto& name : kCorpusNames) {
    std::string path = corpus(name + ".cay");
    std::string original = read_text_file(path);
    FiniteSemigroup s = parse_semigroup_file(path);
    CHECK(serialize_semigroup(s) == original);
    // semigroup-level round trip
    CHECK(parse_semigroup(serialize_semigroup(s)) == s);
  }
}

TEST_CASE("constructed semigroups round-trip through their text form") {
  for (const auto& s :
       {power_semigroup(symmetric_group_3()).sem, holomorph(e3_semilattice()),
        brandt(cyclic_group(2), 2), direct_product({e3_semilattice(), cyclic_group(2)})})
    CHECK(parse_semigroup(serialize_semigroup(s)) == s);
}

TEST_CASE("parser reports positions for malformed documents") {
  auto expect_parse_error = [](const std::string& text, int line, int col) {
    try {
      parse_semigroup(text);
      FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.col == col);
    }
  };
  expect_parse_error("2\n0 x\n1 0\n", 2, 2);        // non-integer token
  expect_parse_error("2\n0 5\n1 0\n", 2, 2);        // out of range
  expect_parse_error("2\n0 1\n1\n", 3, 1);          // short row
  expect_parse_error("# only a comment\n", 1, 1);   // empty document
  expect_parse_error("0\n", 1, 1);                  // empty semigroup
  expect_parse_error("2\n0 1\n1 0\nnames: a\n", 4, 2);
  expect_parse_error("2\n0 1\n1 0\nnames: a b\nextra\n", 5, 1);
}

TEST_CASE("parser skips comments and reports associativity witnesses") {
  FiniteSemigroup s = parse_semigroup("# header\n2\n# middle\n0 1\n1 0\n");
  CHECK(s.size() == 2);
  try {
    parse_semigroup("2\n1 0\n0 0\n");
    FAIL("expected rejection");
  } catch (const AssociativityError& e) {
    CHECK(e.triple == std::array<int, 3>{0, 0, 1});
  }
}

TEST_CASE("subset text form") {
  CHECK(subset_text(Bitset::of(5, {0, 2, 4})) == "{0,2,4}");
  CHECK(parse_subset("{0,2,4}", 5) == Bitset::of(5, {0, 2, 4}));
  CHECK_THROWS_AS(parse_subset("{2,0}", 5), Error);   // not increasing
  CHECK_THROWS_AS(parse_subset("{}", 5), Error);      // empty
  CHECK_THROWS_AS(parse_subset("{9}", 5), Error);     // out of range
  CHECK_THROWS_AS(parse_subset("0,2", 5), Error);     // missing braces
}

TEST_CASE("action documents round-trip") {
  std::string text = "0: 0 1 2\n1: 1 0 2\n";
  std::istringstream in(text);
  auto perms = parse_action_perms(in, 2, 3);
  CHECK(perms[1] == std::vector<int>{1, 0, 2});
  CHECK(serialize_action_perms(perms) == text);
  std::istringstream missing("0: 0 1 2\n");
  CHECK_THROWS_AS(parse_action_perms(missing, 2, 3), Error);
}

TEST_CASE("cli: classify output matches the goldens") {
  for (const auto& name : kCorpusNames) {
    RunResult r = run_cli("classify " + corpus(name + ".cay"));
    CHECK(r.code == 0);
    CHECK(r.out == read_text_file(corpus("expected/classify_" + name + ".txt")));
  }
}

TEST_CASE("cli: exp writes a parseable table and classifies the subsets") {
  std::string out = temp_dir() + "/exp_z2.cay";
  RunResult r = run_cli("exp " + corpus("z2.cay") + " --classify-elements --out " + out);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "out: " + out + "\n" +
        "{0}: idempotent coset(H={0},x=0) group-element inverse={0}\n"
        "{1}: coset(H={0},x=1) group-element inverse={1}\n"
        "{0,1}: idempotent coset(H={0,1},x=0) group-element inverse={0,1}\n"
        "result: ok\n");
  FiniteSemigroup exp_z2 = parse_semigroup_file(out);
  CHECK(exp_z2.size() == 3);
  CHECK(exp_z2 == power_semigroup(cyclic_group(2)).sem);
}

TEST_CASE("cli: obstruct exit codes separate clear and violated inputs") {
  RunResult clear = run_cli("obstruct " + corpus("hol_e3.cay"));
  CHECK(clear.code == 0);
  CHECK(clear.out.find("violations: none") != std::string::npos);
  CHECK(clear.out.find("result: clear") != std::string::npos);

  RunResult bad = run_cli("obstruct " + corpus("brandt_z1_2.cay"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("square-inverse-idempotent: x=(0,e,1)") != std::string::npos);
  CHECK(bad.out.find("result: violations") != std::string::npos);

  // quotient of the holomorph: constructed on the fly, then obstructed
  std::string q = temp_dir() + "/quotient.cay";
  CHECK(run_cli("construct rees " + corpus("hol_e3.cay") + " {4,5} --out " + q).code == 0);
  RunResult qr = run_cli("obstruct " + q);
  CHECK(qr.code == 1);
  CHECK(qr.out.find("square-inverse-idempotent") != std::string::npos);

  RunResult na = run_cli("obstruct " + corpus("z3.cay"));
  CHECK(na.code == 0);  // groups are regular, so the report applies and is clear
}

TEST_CASE("cli: search-embed exit codes 0, 1 and 3") {
  std::string expz2 = temp_dir() + "/exp_z2b.cay";
  REQUIRE(run_cli("exp " + corpus("z2.cay") + " --out " + expz2).code == 0);
  RunResult found = run_cli("search-embed " + corpus("2chain.cay") + " " + expz2);
  CHECK(found.code == 0);
  CHECK(found.out.find("map: 0->2 1->0") != std::string::npos);

  RunResult none = run_cli("search-embed " + corpus("brandt_z1_2.cay") + " " + expz2);
  CHECK(none.code == 1);
  CHECK(none.out.find("result: none-exhaustive") != std::string::npos);

  std::string b22 = temp_dir() + "/b22.cay";
  std::string exps3 = temp_dir() + "/exp_s3.cay";
  REQUIRE(run_cli("construct brandt " + corpus("z2.cay") + " 2 --out " + b22).code == 0);
  REQUIRE(run_cli("exp " + corpus("s3.cay") + " --out " + exps3).code == 0);
  RunResult budget = run_cli("search-embed " + b22 + " " + exps3 + " --max-nodes 3");
  CHECK(budget.code == 3);
  CHECK(budget.out.find("result: none-budget") != std::string::npos);
}

TEST_CASE("cli: certificates verify and corrupted ones fail") {
  std::string cert = temp_dir() + "/z2_zero.cert";
  RunResult emb = run_cli("embed-clifford " + corpus("z2_zero.cay") + " --out " + cert);
  CHECK(emb.code == 0);
  CHECK(emb.out.find("target-order: 4") != std::string::npos);

  RunResult ok = run_cli("verify-cert " + cert + " " + corpus("z2_zero.cay"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("tightened-union: {0,2} order=2") != std::string::npos);
  CHECK(ok.out.find("result: pass") != std::string::npos);

  std::string text = read_text_file(cert);
  std::size_t a = text.find("0 -> {0}");
  std::size_t b = text.find("1 -> {2}");
  REQUIRE(a != std::string::npos);
  REQUIRE(b != std::string::npos);
  text.replace(b, 8, "1 -> {0}");
  text.replace(a, 8, "0 -> {2}");
  std::string broken = temp_dir() + "/broken.cert";
  write_text_file(broken, text);
  RunResult bad = run_cli("verify-cert " + broken + " " + corpus("z2_zero.cay"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("result: fail") != std::string::npos);
}

TEST_CASE("cli: embed-clifford refuses non-Clifford input with exit 1") {
  RunResult r = run_cli("embed-clifford " + corpus("brandt_z1_2.cay"));
  CHECK(r.code == 1);
  CHECK(r.out.find("result: not-clifford-inverse") != std::string::npos);
}

TEST_CASE("cli: construct verbs produce tables the parser accepts") {
  std::string dir = temp_dir();
  std::string action = dir + "/swap.act";
  write_text_file(action, "0: 0 1 2\n1: 1 0 2\n");
  struct Case {
    std::string args;
    int expected_n;
  };
  std::vector<Case> cases = {
      {"construct brandt " + corpus("z1.cay") + " 2", 5},
      {"construct zero " + corpus("z2.cay"), 3},
      {"construct holomorph " + corpus("e3.cay"), 6},
      {"construct product " + corpus("z2.cay") + " " + corpus("z2.cay"), 4},
      {"construct e3", 3},
      {"construct rees " + corpus("hol_e3.cay") + " {4,5}", 5},
      {"construct semidirect " + corpus("e3.cay") + " " + corpus("z2.cay") + " " + action, 6},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::string out = dir + "/construct_" + std::to_string(i) + ".cay";
    RunResult r = run_cli(cases[i].args + " --out " + out);
    CHECK(r.code == 0);
    CHECK(parse_semigroup_file(out).size() == cases[i].expected_n);
  }
  // the semidirect with the swap action is the holomorph, up to labels
  CHECK(parse_semigroup_file(dir + "/construct_6.cay").table() ==
        parse_semigroup_file(corpus("hol_e3.cay")).table());
}

TEST_CASE("cli: repeated runs are byte-identical") {
  std::vector<std::string> commands = {
      "classify " + corpus("hol_e3.cay"),
      "exp " + corpus("klein.cay") + " --classify-elements",
      "obstruct " + corpus("brandt_z1_2.cay"),
      "embed-clifford " + corpus("e3.cay"),
      "search-embed " + corpus("2chain.cay") + " " + corpus("e3.cay"),
      "construct holomorph " + corpus("e3.cay"),
  };
  for (const auto& cmd : commands) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: bad inputs exit with code 2") {
  CHECK(run_cli("classify /nonexistent/file.cay").code == 2);
  CHECK(run_cli("frobnicate " + corpus("z2.cay")).code == 2);
  CHECK(run_cli("classify").code == 2);
  std::string bad = temp_dir() + "/bad.cay";
  write_text_file(bad, "2\n1 0\n0 0\n");
  CHECK(run_cli("classify " + bad).code == 2);
  CHECK(run_cli("exp " + corpus("e3.cay")).code == 2);  // not a group
}

TEST_CASE("cli: the table cap honours HSG_MAX_TABLE") {
  std::string prefixed = "HSG_MAX_TABLE=4 " + std::string(kCli) + " exp " +
                         corpus("z3.cay") + " 2>/dev/null";
  FILE* pipe = popen(prefixed.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256];
  while (fread(buf, 1, sizeof buf, pipe) > 0) {
  }
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
}
