#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glab/cyclo.hpp"
#include "glab/error.hpp"

using namespace glab;

namespace {

Poly<Rat> qpoly(std::initializer_list<int64_t> c) {
  std::vector<Rat> v;
  for (int64_t x : c) v.emplace_back(x);
  return Poly<Rat>(std::move(v));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == qpoly({-1, 1}));
  CHECK(cyclotomic_poly(2) == qpoly({1, 1}));
  CHECK(cyclotomic_poly(3) == qpoly({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == qpoly({1, 0, 1}));
  CHECK(cyclotomic_poly(6) == qpoly({1, -1, 1}));
  CHECK(cyclotomic_poly(7) == qpoly({1, 1, 1, 1, 1, 1, 1}));
  CHECK(cyclotomic_poly(12) == qpoly({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(105).degree() == 48);  // first with a coefficient of -2
  CHECK(cyclotomic_poly(105)[7] == Rat(-2));
}

TEST_CASE("roots of unity") {
  auto z3 = CycloNum::root_of_unity(3);
  CHECK((CycloNum::integer(1) + z3 + z3 * z3).is_zero());
  CHECK(z3 * z3 * z3 == CycloNum::integer(1));
  auto i = CycloNum::root_of_unity(4);
  CHECK(i * i == CycloNum::integer(-1));
  CHECK(CycloNum::root_of_unity(2) == CycloNum::integer(-1));
  CHECK(CycloNum::root_of_unity(6) == -CycloNum::root_of_unity(3, 2));
  CHECK(CycloNum::root_of_unity(5, -1) == CycloNum::root_of_unity(5, 4));
}

TEST_CASE("conjugation and absolute value") {
  auto z5 = CycloNum::root_of_unity(5);
  CHECK(z5.conj() == CycloNum::root_of_unity(5, 4));
  CHECK(z5.abs2() == CycloNum::integer(1));
  auto z3 = CycloNum::root_of_unity(3);
  CHECK((CycloNum::integer(1) + z3).abs2().to_rational() == 1);
  CHECK((CycloNum::integer(2) + z3).abs2().to_rational() == 3);
  CHECK(CycloNum::rational(Rat(-7, 2)).conj() == CycloNum::rational(Rat(-7, 2)));
}

TEST_CASE("rationality detection") {
  auto z3 = CycloNum::root_of_unity(3);
  CHECK_FALSE(z3.is_rational());
  CHECK((z3 + z3.conj()).to_rational() == -1);  // zeta + zeta^2 = -1
  CHECK_THROWS_AS(z3.to_rational(), error);
  CHECK(CycloNum().is_zero());
  CHECK(CycloNum().to_rational() == 0);
}

TEST_CASE("mixed conductors promote through the lcm") {
  auto z3 = CycloNum::root_of_unity(3);
  auto i = CycloNum::root_of_unity(4);
  auto s = z3 * i;  // zeta_12^7, a primitive 12th root of unity
  CHECK(s.conductor() == 12);
  CHECK(s.abs2() == CycloNum::integer(1));
  CHECK(s == CycloNum::root_of_unity(12, 7));
  CHECK(s * s * s * s * s * s == CycloNum::integer(-1));
  CHECK(z3.promoted(12) == z3);
  CHECK_THROWS_AS(z3.promoted(8), error);
}

TEST_CASE("norm expansion certificate") {
  // |(n-1) + zeta|^2 - (n-2)^2 = (n-1)|1 + zeta|^2 for any root of unity
  for (uint64_t l : {3, 5, 7}) {
    for (int64_t n : {3, 4, 5, 9}) {
      auto z = CycloNum::root_of_unity(l);
      auto lhs = (CycloNum::integer(n - 1) + z).abs2() - CycloNum::integer((n - 2) * (n - 2));
      auto rhs = (CycloNum::integer(1) + z).abs2().scaled(Rat(n - 1));
      CHECK(lhs == rhs);
      CHECK_FALSE((CycloNum::integer(1) + z).abs2().is_zero());
    }
  }
}

TEST_CASE("scalars and printing") {
  auto z3 = CycloNum::root_of_unity(3);
  CHECK((z3.scaled(Rat(2))).divided(Rat(2)) == z3);
  CHECK_THROWS_AS(z3.divided(Rat(0)), error);
  CHECK(z3.str() == "z");
  CHECK((CycloNum::integer(2) + CycloNum::root_of_unity(3, 2)).str() == "1 - z");
  CHECK(CycloNum::rational(Rat(1, 2)).str() == "1/2");
  CHECK((CycloNum::root_of_unity(5, 2) - CycloNum::root_of_unity(5, 1)).str() == "-z + z^2");
  CHECK(CycloNum().str() == "0");
}
