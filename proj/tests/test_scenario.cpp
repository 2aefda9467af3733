#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <glab/error.hpp>
#include <glab/scenario.hpp>

using namespace glab;

TEST_CASE("catalog listing is stable") {
  auto list = list_scenarios();
  REQUIRE(list.size() == 7);
  const char* ids[] = {"example1",  "quaternion",   "rigidity-s3", "splitting-psl27",
                       "psl2f11",   "torsion-29-7", "cft-params"};
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(list[i].id == ids[i]);
    CHECK_FALSE(list[i].title.empty());
  }
}

TEST_CASE("unknown id is rejected") {
  CHECK_THROWS_WITH_AS(run_scenario("nonsense"), doctest::Contains("unknown scenario"),
                       error);
}

TEST_CASE("example1 passes and reports every expectation") {
  auto r = run_scenario("example1");
  CHECK(r.pass);
  REQUIRE(r.lines.size() == 6);
  CHECK(r.lines[0] == "ok zeta_numerator = 7*T^2 + 4*T + 1  [reported]");
  CHECK(r.lines[1] == "ok class_number = 12  [derived]");
  CHECK(r.lines[2] == "ok j1 = 0  [reported]");
  CHECK(r.lines[3] == "ok j2 = 2  [reported]");
  CHECK(r.lines[4] == "ok split_equivalent = false  [derived]");
  CHECK(r.lines[5] == "ok witness = x + 6  [derived]");
  CHECK(r.text().find("result: PASS") != std::string::npos);

  // byte-identical reruns
  auto r2 = run_scenario("example1");
  CHECK(r.text() == r2.text());
}

TEST_CASE("quaternion contrast passes") {
  auto r = run_scenario("quaternion");
  CHECK(r.pass);
  REQUIRE(r.lines.size() == 4);
  CHECK(r.lines[0] == "ok induced_equal = true  [derived]");
  CHECK(r.lines[1] == "ok subgroups_conjugate = false  [derived]");
}

TEST_CASE("rigidity scenario passes") {
  auto r = run_scenario("rigidity-s3");
  CHECK(r.pass);
  REQUIRE(r.lines.size() == 5);
  CHECK(r.lines[0] == "ok orders = 162, 81, 54  [definition]");
  CHECK(r.lines[1] == "ok violations = 0, 0, 0  [derived]");
}

TEST_CASE("splitting scenario passes") {
  auto r = run_scenario("splitting-psl27");
  CHECK(r.pass);
  REQUIRE(r.lines.size() == 4);
  CHECK(r.lines[0] == "ok split_equivalent = true  [reported]");
  CHECK(r.lines[1] == "ok ramified = x  [derived]");
  CHECK(r.lines[2] == "ok clgroup1 = Z/8  [reported]");
  CHECK(r.lines[3] == "ok clgroup2 = Z/2 x Z/4  [reported]");
}

TEST_CASE("torsion scenario passes") {
  auto r = run_scenario("torsion-29-7");
  CHECK(r.pass);
  REQUIRE(r.lines.size() == 4);
  CHECK(r.lines[0] == "ok divpoly_degree = 24  [reported]");
  CHECK(r.lines[1] == "ok resultant_degree_y = 48  [derived]");
  CHECK(r.lines[3] == "ok igusa_trivial = true  [reported]");
}

TEST_CASE("cft scenario passes") {
  auto r = run_scenario("cft-params");
  CHECK(r.pass);
  REQUIRE(r.lines.size() == 4);
  CHECK(r.lines[0] == "ok choose_ell = 5, 5, 5  [derived]");
  CHECK(r.lines[1] == "ok ray_orders = 96, 400, 57  [derived]");
  CHECK(r.lines[2] == "ok ray_divisible = true, true, false  [derived]");
  CHECK(r.lines[3] == "ok rule_violations = 0  [derived]");
}

TEST_CASE("psl2f11 scenario passes") {
  auto r = run_scenario("psl2f11");
  CHECK(r.pass);
  REQUIRE(r.lines.size() == 4);
  CHECK(r.lines[0] == "ok group_order = 660  [definition]");
  CHECK(r.lines[1] == "ok subgroup_classes = 2  [derived]");
  CHECK(r.lines[2] == "ok equivalent = true  [reported]");
  CHECK(r.lines[3] == "ok trivial = false  [reported]");
}
