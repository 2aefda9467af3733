#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <glab/fq.hpp>
#include <glab/fqpoly.hpp>
#include <glab/rational.hpp>
#include <glab/resultant.hpp>

#include <random>

using namespace glab;

namespace {

Poly<BigInt> ip(std::vector<int64_t> v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return Poly<BigInt>(std::move(c));
}

Poly<FqElem> random_poly(const FqFieldPtr& f, int deg, std::mt19937& rng) {
  std::vector<FqElem> c;
  for (int i = 0; i < deg; ++i)
    c.push_back(f->from_index(rng() % f->q()));
  c.push_back(f->from_index(1 + rng() % (f->q() - 1)));  // honest degree
  return Poly<FqElem>(std::move(c));
}

}  // namespace

TEST_CASE("determinants: bareiss equals cofactor expansion") {
  std::mt19937 rng(7);
  BigInt one = 1;
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n),
                                         std::vector<BigInt>(static_cast<std::size_t>(n)));
      for (auto& row : m)
        for (auto& x : row) x = static_cast<int64_t>(rng() % 19) - 9;
      CHECK(det_bareiss(m, one) == det_cofactor(m, one));
    }
  }
  // pivoting path: leading zero forces a row swap and a sign flip
  std::vector<std::vector<BigInt>> sw{{0, 1}, {1, 0}};
  CHECK(det_bareiss(sw, one) == -1);
  std::vector<std::vector<BigInt>> sing{{1, 2}, {2, 4}};
  CHECK(det_bareiss(sing, one) == 0);
  CHECK(det_bareiss(std::vector<std::vector<BigInt>>{}, one) == 1);
}

TEST_CASE("resultant of x^2 - a and x - b is b^2 - a") {
  for (int64_t a = -3; a <= 3; ++a)
    for (int64_t b = -3; b <= 3; ++b) {
      auto f = ip({-a, 0, 1});
      auto g = ip({-b, 1});
      CHECK(resultant(f, g) == b * b - a);
    }
}

TEST_CASE("resultant laws over F_7") {
  auto F = FqField::make(7);
  std::mt19937 rng(20260819);
  for (int rep = 0; rep < 60; ++rep) {
    auto f = random_poly(F, 1 + static_cast<int>(rng() % 4), rng);
    auto g = random_poly(F, 1 + static_cast<int>(rng() % 4), rng);
    auto h = random_poly(F, 1 + static_cast<int>(rng() % 3), rng);
    FqElem rs = resultant(f, g);
    // the Sylvester route and the Euclidean route agree
    CHECK(rs == resultant_euclid(f, g));
    // swap law
    FqElem swapped = resultant(g, f);
    if ((f.degree() * g.degree()) % 2)
      CHECK(rs == swapped * F->from_int(-1));
    else
      CHECK(rs == swapped);
    // multiplicativity in the second argument
    CHECK(resultant(f, g * h) == rs * resultant(f, h));
    // common root forces zero
    CHECK(resultant(f * h, g * h).is_zero());
  }
  // constant second argument: Res(f, c) = c^{deg f}
  auto f = random_poly(F, 3, rng);
  auto c = Poly<FqElem>::constant(F->from_int(3));
  CHECK(resultant_euclid(f, c) == F->from_int(3).pow(3));
  CHECK(resultant(f, c) == F->from_int(3).pow(3));
}

TEST_CASE("unit-lc division") {
  auto a = ip({3, -2, 0, 5, 7});
  auto b = ip({4, -1, 1});  // monic: unit lc over the integers
  auto [q, r] = poly_divrem_unit(a, b, BigInt(1));
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  // unit lc -1
  auto b2 = ip({4, 2, -1});
  auto [q2, r2] = poly_divrem_unit(a, b2, BigInt(-1));
  CHECK(q2 * b2 + r2 == a);
  CHECK(r2.degree() < b2.degree());
  CHECK_THROWS_AS(poly_divrem_unit(a, Poly<BigInt>(), BigInt(1)), error);
}

TEST_CASE("resultant rejects zero polynomials") {
  CHECK_THROWS_AS(resultant(ip({}), ip({1, 1})), error);
  Poly<Rat> f(std::vector<Rat>{Rat(1), Rat(1)});
  CHECK_THROWS_AS(resultant_euclid(f, Poly<Rat>()), error);
}
