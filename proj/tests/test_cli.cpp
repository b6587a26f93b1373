#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "upsilon/codes.hpp"
#include "upsilon/tiling.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(UPSILON_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::current_path() / "cli_work";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

bool has_line(const std::string& out, const std::string& line) {
  return out.find(line + "\n") != std::string::npos;
}

std::string last_line(const std::string& out) {
  if (out.empty()) return {};
  const auto end = out.size() - 1;
  const auto start = out.rfind('\n', end - 1);
  return out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1));
}

}  // namespace

TEST_CASE("gen-code") {
  auto r = cli("gen-code --base 2 --t 3 --out " + path("h7.code"));
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "size: 16"));
  CHECK(has_line(r.out, "length: 7"));
  CHECK(has_line(r.out, "min_distance: 3"));
  CHECK(has_line(r.out, "perfect: yes"));
  const auto c = upsilon::load_code(path("h7.code"));
  CHECK(c.size() == 16);

  r = cli("gen-code --base 3 --t 2 --out " + path("t4.code"));
  CHECK(r.code == 0);
  CHECK(upsilon::load_code(path("t4.code")).size() == 9);
  CHECK(upsilon::load_code(path("t4.code")).length() == 4);

  r = cli("gen-code --base 2 --t 2 --out " + path("h3.code"));
  CHECK(slurp(path("h3.code")) == "CODE v1\nq 2\nn 3\ncount 2\n0 0 0\n1 1 1\n");

  CHECK(cli("gen-code --base 3 --t 1 --out " + path("t1.code")).code == 0);
  CHECK(cli("gen-code --base 5 --t 2 --out " + path("x.code")).code == 2);
  CHECK(cli("gen-code --base 2 --out " + path("x.code")).code == 2);
  CHECK(cli("gen-code --base 2 --t 9 --out " + path("x.code")).code == 2);
  CHECK(cli("gen-code --base 2 --t 5 --out " + path("x.code")).code == 4);
  CHECK(cli("no-such-command").code == 2);
}

TEST_CASE("build-tiling and verify") {
  auto r = cli("build-tiling --method binary --code " + path("h7.code") + " --out " + path("b7.til"));
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "n: 7"));
  CHECK(has_line(r.out, "p: 4"));
  CHECK(has_line(r.out, "count: 16"));
  CHECK(has_line(r.out, "is_tiling: true"));

  r = cli("build-tiling --method punctured --code " + path("h7.code") + " --out " + path("p7.til"));
  CHECK(r.code == 0);
  const auto p7 = upsilon::load_tiling(path("p7.til"));
  bool odd = false;
  for (const auto& x : p7.codewords())
    for (auto v : x) odd = odd || v % 2 != 0;
  CHECK(odd);

  r = cli("build-tiling --method ternary --code " + path("h7.code") + " --out " + path("x.til"));
  CHECK(r.code == 3);
  {
    std::ofstream bad(path("bad.code"));
    bad << "CODE v1\nq 2\nn 7\ncount 1\n0 0 0 0 0 0 0\n";
  }
  CHECK(cli("build-tiling --method binary --code " + path("bad.code") + " --out " + path("x.til")).code == 3);

  r = cli("verify --tiling " + path("b7.til") + " --min-dist --audit");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "min_cross_distance: 3"));
  CHECK(has_line(r.out, "audit_passed: true"));
  CHECK(last_line(r.out) == "result: pass");

  r = cli("verify --tiling " + path("b7.til") + " --format tree");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"is_tiling\": true") != std::string::npos);
}

TEST_CASE("verify a known Z_4^7 tiling and a duplicate") {
  upsilon::save_tiling(path("example.til"), upsilon::PeriodicTiling(7, 4, testsupport::example_z4_7()));
  CHECK(cli("verify --tiling " + path("example.til")).code == 0);

  std::string text = slurp(path("example.til"));
  const auto pos = text.find("0 0 0 0 2 2 2\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 14, "0 0 0 0 0 0 0\n");
  {
    std::ofstream out(path("dup.til"), std::ios::binary);
    out << text;
  }
  const auto r = cli("verify --tiling " + path("dup.til"));
  CHECK(r.code == 1);
  CHECK(r.out.find("first_witness_cell: ") != std::string::npos);
  CHECK(last_line(r.out) == "result: fail");

  {
    std::ofstream out(path("garbage.til"));
    out << "TILING v1\nn 2\np 4\ncount 1\n0 zz\n";
  }
  CHECK(cli("verify --tiling " + path("garbage.til")).code == 2);
  CHECK(cli("verify --tiling " + path("missing.til")).code == 2);
}

TEST_CASE("locate") {
  auto r = cli("locate --tiling-method ternary --code " + path("t1.code") + " --point \"1 1\"");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "codeword: (3,2)"));
  CHECK(has_line(r.out, "offset: (2,1)"));
  CHECK(has_line(r.out, "covers: true"));
  r = cli("locate --tiling-method binary --code " + path("h7.code") + " --point \"0 0 0 0 0 0 0\"");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "codeword: (0,0,0,0,0,0,0)"));
  for (int k = 0; k < 10; ++k) {
    const auto a = testsupport::random_point(8, -40, 40);
    r = cli("locate --tiling-method ternary --code " + path("t4.code") + " --point \"" + a.to_words() + "\"");
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "covers: true"));
  }
  CHECK(cli("locate --tiling-method binary --code " + path("h7.code") + " --point \"0 0\"").code == 2);
  CHECK(cli("locate --tiling-method binary --code " + path("h7.code") + " --point \"0 a 0\"").code == 2);
}

TEST_CASE("exist and search") {
  auto r = cli("exist --n 5");
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "conclusion: no tiling: forced period 4, 192 does not divide 1024"));
  r = cli("exist --n 7");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "witness_verified: true"));
  r = cli("exist --n 8");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "witness: ternary construction, 186624 codewords over Z_12^8"));
  CHECK(has_line(r.out, "witness_verified: true"));
  r = cli("exist --n 15");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "admissible: yes"));

  r = cli("search --n 2 --p 12");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "solutions: 1"));
  r = cli("search --n 2 --p 4");
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "status: rejected-by-divisibility"));
  CHECK(cli("search --n 7 --p 12").code == 4);
  CHECK(cli("search --n 2 --p 12 --max-solutions 0 --node-budget 3").code == 4);
}

TEST_CASE("export-svg") {
  CHECK(cli("build-tiling --method ternary --code " + path("t1.code") + " --out " + path("l2.til")).code == 0);
  auto r = cli("export-svg --tiling " + path("l2.til") + " --out " + path("a.svg"));
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "cells: 144"));
  CHECK(cli("export-svg --tiling " + path("l2.til") + " --out " + path("b.svg")).code == 0);
  CHECK(slurp(path("a.svg")) == slurp(path("b.svg")));
  CHECK(cli("export-svg --tiling " + path("b7.til") + " --out " + path("c.svg")).code == 3);
  {
    std::ofstream out(path("half.til"));
    out << "TILING v1\nn 2\np 12\ncount 1\n0 0\n";
  }
  CHECK(cli("export-svg --tiling " + path("half.til") + " --out " + path("d.svg")).code == 3);
  CHECK_FALSE(fs::exists(path("d.svg")));
}

TEST_CASE("outputs are byte-identical across runs") {
  CHECK(cli("gen-code --base 2 --t 3 --out " + path("h7b.code")).code == 0);
  CHECK(slurp(path("h7.code")) == slurp(path("h7b.code")));
  CHECK(cli("build-tiling --method binary --code " + path("h7.code") + " --out " + path("b7b.til")).code == 0);
  CHECK(slurp(path("b7.til")) == slurp(path("b7b.til")));
  const auto a = cli("--threads 1 verify --tiling " + path("dup.til"));
  const auto b = cli("--threads 3 verify --tiling " + path("dup.til"));
  CHECK(a.out == b.out);
}
