#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct GoldenCase {
  std::string args;     // after the binary, with {DIR} for the corpus dir
  std::string golden;   // expected combined stdout+stderr
  int exit_code;
};

const std::vector<GoldenCase> kCases = {
    {"check {DIR}/g01.json --predicate s2as,s-second", "g01.out", 0},
    {"classify {DIR}/g01.json --predicate s2as", "g02.out", 0},
    {"check {DIR}/g03.json --predicate s2as --expect false", "g03.out", 0},
    {"check {DIR}/g04.json --predicate s2as,s-second", "g04.out", 0},
    {"check {DIR}/g01.json --predicate s2as --format structured", "g05.out", 0},
    {"verify {DIR}/g06.json --checks four-equivalences,colon-characterization,"
     "sum-of-seconds",
     "g06.out", 0},
    {"gen --seed 42", "g07.out", 0},
    {"check {DIR}/g08.json --predicate s2as,s-prime", "g08.out", 0},
    {"check {DIR}/g09.json --predicate s2as", "g09.out", 2},
    {"classify {DIR}/g10.json --predicate s-second --format structured", "g10.out", 0},
};

std::string substitute(std::string s, const std::string& dir) {
  std::string::size_type p;
  while ((p = s.find("{DIR}")) != std::string::npos) s.replace(p, 5, dir);
  return s;
}

std::pair<std::string, int> run(const std::string& args) {
  std::string cmd = std::string(FINMOD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {out, WEXITSTATUS(status)};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("golden corpus is byte-stable across two runs") {
  const std::string dir = FINMOD_GOLDEN_DIR;
  for (const GoldenCase& c : kCases) {
    CAPTURE(c.golden);
    std::string args = substitute(c.args, dir);
    auto [out1, code1] = run(args);
    auto [out2, code2] = run(args);
    CHECK(out1 == slurp(dir + "/" + c.golden));
    CHECK(out1 == out2);
    CHECK(code1 == c.exit_code);
    CHECK(code2 == c.exit_code);
  }
}

TEST_CASE("expect mismatch and verify refutation drive the exit code") {
  const std::string dir = FINMOD_GOLDEN_DIR;
  auto [out, code] = run(substitute("check {DIR}/g03.json --predicate s2as "
                                    "--expect true",
                                    dir));
  CHECK(code == 1);

  auto [out2, code2] = run(substitute("check {DIR}/g01.json --predicate s2as "
                                      "--expect true",
                                      dir));
  CHECK(code2 == 0);
}

TEST_CASE("stdin input") {
  const std::string dir = FINMOD_GOLDEN_DIR;
  std::string cmd = "cat " + dir + "/g01.json | " + std::string(FINMOD_CLI_PATH) +
                    " check - --predicate s2as 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(out.find("M s2as: true witness_s=1") != std::string::npos);
}

TEST_CASE("usage errors") {
  auto [out, code] = run("check");  // missing file and predicate
  CHECK(code != 0);
  auto [out2, code2] = run("verify --checks not-a-check");
  CHECK(code2 == 2);
  CHECK(out2.find("unknown check id") != std::string::npos);
}
