#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(KNITORD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("cli nf, sign, cmp, mul, inv") {
  auto r = run_cli("nf --group h-amalgam yy");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "Y Δ^1");
  // canonical forms are fixed points of nf
  CHECK(first_line(run_cli("nf --group h-amalgam 'Y Δ^1'").out) == "Y Δ^1");

  r = run_cli("sign --group h-amalgam yZ");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "Positive (class C)");

  CHECK(first_line(run_cli("cmp --group b3 aba bab").out) == "Equal");
  CHECK(first_line(run_cli("cmp --group b3 '' a").out) == "Less");
  CHECK(first_line(run_cli("nf --group b3 aBA").out) == "BAb");
  CHECK(first_line(run_cli("sign --group b3 abA").out) == "Positive");

  r = run_cli("mul --group g-paper '(y;a)' '(y;b)'");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "(Y Δ^1;bb)");
  CHECK(first_line(run_cli("inv --group g-paper '(y;a)'").out) == "(Y Δ^0;B)");
  CHECK(first_line(run_cli("nf --group g-paper ay").out) == "(y Δ^0;b)");
  CHECK(first_line(run_cli("cmp --group 'z-lex(2)' '' uv").out) == "Less");
  CHECK(first_line(run_cli("cmp --group thm2-direct uV '' ").out) ==
        "Incomparable");
}

TEST_CASE("cli verify and axioms") {
  auto r = run_cli("verify --group g-paper --suite partition --radius 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  r = run_cli(
      "verify --group b3-corrupt --suite partition --radius 3 "
      "--format json-lines");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"violations\":[{") != std::string::npos);

  r = run_cli("axioms --group thm2-direct --rh 2 --rk 2");
  CHECK(r.exit_code == 0);

  r = run_cli("axioms --group g-paper-badbeta --rh 3 --rk 1");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("sign --group h-amalgam yq").exit_code == 2);
  CHECK(run_cli("sign --group no-such-group y").exit_code == 2);
  CHECK(run_cli("bogus-command").exit_code == 2);
  CHECK(run_cli("sign --group b3").exit_code == 2);  // missing word
  CHECK(run_cli("nf --group b3 --step-limit 0 aBA").exit_code == 3);
}

TEST_CASE("cli json-lines is one line per report") {
  auto r = run_cli(
      "verify --group h-amalgam --suite semigroup --radius 3 "
      "--format json-lines");
  CHECK(r.exit_code == 0);
  REQUIRE(!r.out.empty());
  CHECK(r.out.back() == '\n');
  CHECK(first_line(r.out).front() == '{');
  CHECK(first_line(r.out).find("\"checked\":") != std::string::npos);
}
