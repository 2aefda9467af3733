#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// Drives the installed binary end to end; GLAB_BIN and GLAB_DATA are set by
// the test registration.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

std::string bin_path() {
  const char* p = std::getenv("GLAB_BIN");
  REQUIRE_MESSAGE(p != nullptr, "GLAB_BIN must point at the glab binary");
  return p;
}

std::string data_path() {
  const char* p = std::getenv("GLAB_DATA");
  REQUIRE_MESSAGE(p != nullptr, "GLAB_DATA must point at the data directory");
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = bin_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& sub) {
  return s.find(sub) != std::string::npos;
}

}  // namespace

TEST_CASE("split reports the pattern at one place and over a scan") {
  auto r = run("split " + data_path() + "/example1_a.poly --place \"x-1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x + 6: {1,1}\n");

  auto scan = run("split " + data_path() + "/example1_a.poly --bound 1");
  CHECK(scan.exit_code == 0);
  CHECK(contains(scan.output, "x: {1,1}"));
  CHECK(contains(scan.output, "x + 1: ramified"));
  CHECK(contains(scan.output, "x + 6: {1,1}"));
}

TEST_CASE("split-equiv finds the degree-1 witness for the quadratic pair") {
  auto r = run("split-equiv " + data_path() + "/example1_a.poly " + data_path() +
               "/example1_b.poly --bound 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "equivalent=false compared=3 witness=x + 6 degrees_f={1,1} degrees_g={2} "
        "ramified=[x + 1, x + 2, x + 3, x + 4]\n");
}

TEST_CASE("split-equiv agrees through degree 2 for the degree-7 pair") {
  auto r = run("split-equiv " + data_path() + "/deg7_a.poly " + data_path() +
               "/deg7_b.poly --bound 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "equivalent=true compared=27"));
  CHECK(contains(r.output, "ramified=[x]"));
}

TEST_CASE("zeta, lfun, and the elliptic verbs reproduce the catalog values") {
  auto z = run("zeta --curve \"0,1\" --q 7");
  CHECK(z.exit_code == 0);
  CHECK(z.output ==
        "q=7 genus=1 numerator=7*T^2 + 4*T + 1 class_number=12 b=[12, 18, 104]\n");

  auto l = run("lfun --quad \"x^3+3*x+1\" --q 7");
  CHECK(l.exit_code == 0);
  CHECK(l.output == "L = 7*T^2 + 4*T + 1\n");

  CHECK(run("count --curve \"1,0\" --q 7").output == "#E(F_7) = 8\n");
  CHECK(run("count --curve \"1,0\" --q 7 --i 2").output == "#E(F_49) = 64\n");
  CHECK(run("clgroup --curve \"1,0\"").output == "E(F_7) = Z/8, order 8\n");
  CHECK(run("clgroup --curve \"3,0\"").output == "E(F_7) = Z/2 x Z/4, order 8\n");
  CHECK(run("j --curve \"0,1\"").output == "j = 0\n");
  CHECK(run("j --curve \"3,1\"").output == "j = 2\n");
}

TEST_CASE("divpoly and torsion-resultant handle both coefficient domains") {
  auto d = run("divpoly --curve \"2,3\" --q 7 --l 3");
  CHECK(d.exit_code == 0);
  CHECK(d.output == "l=3 degree=4\npsi = 3*x^4 + 5*x^2 + x + 3\n");

  auto dt = run("divpoly --curve \"E/F_29: a=t, b=t+1\" --l 7");
  CHECK(dt.exit_code == 0);
  CHECK(contains(dt.output, "l=7 degree=24"));

  auto tr = run("torsion-resultant --curve \"E/F_29: a=t, b=t+1\" --l 7");
  CHECK(tr.exit_code == 0);
  CHECK(contains(tr.output, "deg_y R = 48"));
  CHECK(contains(tr.output, "separable: yes"));
}

TEST_CASE("igusa and cft verbs") {
  auto ig = run("igusa --q 29 --l 7");
  CHECK(ig.exit_code == 0);
  CHECK(contains(ig.output, "H = <1> = {1} in F_7^*"));
  CHECK(contains(ig.output, "trivial constant-field subgroup"));

  auto ig2 = run("igusa --q 2 --l 7");
  CHECK(ig2.exit_code == 0);
  CHECK(contains(ig2.output, "H = <2> = {1, 2, 4} in F_7^*"));
  CHECK(contains(ig2.output, "nontrivial constant-field subgroup of order 3"));

  auto cp = run("cft params --p 7 --q 7 --order 4 --h 12");
  CHECK(cp.exit_code == 0);
  CHECK(cp.output == "l=5, conductor degree T must be a multiple of 4\n");

  auto cr = run("cft ray --h 1 --q 7 --T 4 --l 5");
  CHECK(cr.exit_code == 0);
  CHECK(contains(cr.output, "order=400"));
  CHECK(contains(cr.output, "divisible by 5 = true"));
}

TEST_CASE("scenario list and run") {
  auto ls = run("scenario list");
  CHECK(ls.exit_code == 0);
  CHECK(contains(ls.output, "example1:"));
  CHECK(contains(ls.output, "cft-params:"));

  auto r = run("scenario run quaternion");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "ok induced_equal = true  [derived]"));
  CHECK(contains(r.output, "result: PASS"));
}

TEST_CASE("json output is flat key-value") {
  auto z = run("--json zeta --curve \"0,1\" --q 7");
  CHECK(z.exit_code == 0);
  CHECK(contains(z.output, "\"numerator\": \"7*T^2 + 4*T + 1\""));
  CHECK(contains(z.output, "\"class_number\": \"12\""));

  // global flags also parse after the subcommand
  auto g = run("clgroup --curve \"3,0\" --json");
  CHECK(g.exit_code == 0);
  CHECK(contains(g.output, "\"group\": \"Z/2 x Z/4\""));
}

TEST_CASE("exit codes follow the contract") {
  CHECK(run("").exit_code == 2);                                   // missing subcommand
  CHECK(run("--help").exit_code == 0);
  CHECK(run("scenario run nope").exit_code == 2);                  // unknown id
  CHECK(run("zeta --curve \"0,0\"").exit_code == 2);               // singular curve
  CHECK(run("zeta --curve \"0,1\" --q 12").exit_code == 2);        // not a prime power
  CHECK(run("lfun --quad \"x^5+x+1\" --q 7").exit_code == 2);      // not squarefree
  CHECK(run("split " + data_path() + "/example1_a.poly --place \"x^2\"").exit_code == 2);
  CHECK(run("split " + data_path() + "/missing.poly").exit_code == 2);
  CHECK(run("divpoly --curve \"2,3\" --q 7 --l 7").exit_code == 2);  // l = p
  CHECK(run("count --curve \"0,1\" --i 9").exit_code == 2);          // enumeration guard
  CHECK(run("count --curve \"E/F_29: a=t, b=t+1\"").exit_code == 2);
  CHECK(run("cft params --p 7 --q 7").exit_code == 2);               // missing required
}

TEST_CASE("scenario output is byte-identical across runs") {
  auto a = run("scenario run example1");
  auto b = run("scenario run example1");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}
