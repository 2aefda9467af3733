#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <glab/error.hpp>
#include <glab/ffext.hpp>
#include <glab/fq.hpp>
#include <glab/fqpoly.hpp>
#include <glab/parse.hpp>

using namespace glab;

namespace {

FqFieldPtr F7() { return FqField::make(7); }
ParseContext cx(const FqFieldPtr& f) { return ParseContext{f, "x", "y", ""}; }

Poly<FqElem> xpoly(const FqFieldPtr& f, const std::string& s) {
  return parse_univariate(s, cx(f));
}
Poly<Poly<FqElem>> curve(const FqFieldPtr& f, const std::string& s) {
  return parse_bivariate(s, cx(f));
}

std::vector<BigInt> coeffs(const Poly<BigInt>& p) {
  return std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end());
}

}  // namespace

TEST_CASE("places in canonical order") {
  auto f = F7();
  auto p1 = places_up_to(f, 1);
  REQUIRE(p1.size() == 8);
  const char* want[] = {"x", "x + 1", "x + 2", "x + 3", "x + 4", "x + 5", "x + 6", "inf"};
  for (std::size_t i = 0; i < 8; ++i) CHECK(p1[i].str() == want[i]);
  CHECK(p1[7].infinite);
  CHECK(p1[7].degree() == 1);

  auto p2 = places_up_to(f, 2);
  REQUIRE(p2.size() == 29);  // 7 + infinity + 21 quadratics
  CHECK(p2[8].str() == "x^2 + 1");
  CHECK(p2[9].str() == "x^2 + 2");
  CHECK(p2[10].str() == "x^2 + 4");
  CHECK(p2[11].str() == "x^2 + x + 3");
  CHECK(p2[12].str() == "x^2 + x + 4");

  auto p4 = places_up_to(f, 4);
  std::size_t by_degree[5] = {0, 0, 0, 0, 0};
  for (const auto& p : p4) ++by_degree[p.degree()];
  CHECK(by_degree[1] == 8);
  CHECK(by_degree[2] == 21);
  CHECK(by_degree[3] == 112);
  CHECK(by_degree[4] == 588);

  auto f2 = FqField::make(2);
  auto q2 = places_up_to(f2, 3);
  std::size_t deg3 = 0;
  for (const auto& p : q2)
    if (p.degree() == 3) ++deg3;
  CHECK(deg3 == 2);

  CHECK_THROWS_AS(make_place(xpoly(f, "x^2 + x")), error);  // x(x+1)
  CHECK(make_place(xpoly(f, "3*x + 3")).str() == "x + 1");  // normalized monic
}

TEST_CASE("splitting patterns of the two cubic twins") {
  auto f = F7();
  auto k1 = curve(f, "y^2 - x^3 - 1");
  auto k2 = curve(f, "y^2 - x^3 - 3*x - 1");
  auto places = places_up_to(f, 1);

  // frozen degree-1 behavior, place by place
  const char* want1[] = {"{1,1}", "ram", "ram", "{1,1}", "ram", "{1,1}", "{1,1}"};
  const char* want2[] = {"{1,1}", "{1,1}", "{1,1}", "ram", "{1,1}", "{1,1}", "{2}"};
  for (int i = 0; i < 7; ++i) {
    auto s1 = splitting_pattern(k1, places[static_cast<std::size_t>(i)]);
    auto s2 = splitting_pattern(k2, places[static_cast<std::size_t>(i)]);
    auto fmt = [](const SplittingPattern& s) {
      if (s.ramified) return std::string("ram");
      std::string out = "{";
      for (std::size_t j = 0; j < s.degrees.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(s.degrees[j]);
      }
      return out + "}";
    };
    CHECK(fmt(s1) == want1[i]);
    CHECK(fmt(s2) == want2[i]);
  }

  auto cmp = splitting_equivalent(k1, k2, 1);
  CHECK_FALSE(cmp.equivalent);
  REQUIRE(cmp.witness.has_value());
  CHECK(cmp.witness->str() == "x + 6");
  CHECK(cmp.witness_degrees_f == std::vector<int>{1, 1});
  CHECK(cmp.witness_degrees_g == std::vector<int>{2});
  CHECK(cmp.places_compared == 3);  // x, x+5, x+6
  REQUIRE(cmp.ramified.size() == 4);
  CHECK(cmp.ramified[0].str() == "x + 1");
  CHECK(cmp.ramified[1].str() == "x + 2");
  CHECK(cmp.ramified[2].str() == "x + 3");
  CHECK(cmp.ramified[3].str() == "x + 4");

  CHECK_THROWS_AS(splitting_pattern(k1, infinite_place(f)), error);
  CHECK_THROWS_AS(splitting_equivalent(k1, curve(f, "y^3 - x"), 1), error);
  CHECK_THROWS_AS(splitting_pattern(curve(f, "2*y^2 - x"), places[0]), error);
}

TEST_CASE("splitting patterns of the degree-7 pair") {
  auto f7 = F7();
  auto a = curve(f7, "y^7 + 2*y^3 + 2*y + 6*x^2");
  auto b = curve(f7, "y^7 + y^3 + 5*y + 4*x^2");
  auto places = places_up_to(f7, 2);

  auto degs = [&](const Poly<Poly<FqElem>>& c, std::size_t i) {
    return splitting_pattern(c, places[i]).degrees;
  };
  CHECK(splitting_pattern(a, places[0]).ramified);  // x
  CHECK(splitting_pattern(b, places[0]).ramified);
  CHECK(degs(a, 1) == std::vector<int>{1, 3, 3});  // x + 1
  CHECK(degs(a, 2) == std::vector<int>{7});        // x + 2
  CHECK(degs(a, 3) == std::vector<int>{1, 2, 4});  // x + 3
  CHECK(degs(a, 8) == std::vector<int>{1, 3, 3});        // x^2 + 1
  CHECK(degs(a, 9) == std::vector<int>{1, 1, 1, 2, 2});  // x^2 + 2
  CHECK(degs(a, 10) == std::vector<int>{7});             // x^2 + 4

  auto cmp = splitting_equivalent(a, b, 2);
  CHECK(cmp.equivalent);
  CHECK_FALSE(cmp.witness.has_value());
  CHECK(cmp.places_compared == 27);  // 28 finite places, only x ramified
  REQUIRE(cmp.ramified.size() == 1);
  CHECK(cmp.ramified[0].str() == "x");
}

TEST_CASE("zeta data from point counts") {
  auto z = zeta_from_counts({12}, 7, 1, 3);
  CHECK(poly_str_signed(z.numerator, "T") == "7*T^2 + 4*T + 1");
  CHECK(z.class_number == 12);
  CHECK(z.place_counts == std::vector<BigInt>{12, 18, 104});

  // supplying more counts is fine when they are consistent
  auto z2 = zeta_from_counts({12, 48, 324}, 7, 1, 2);
  CHECK(z2.numerator == z.numerator);
  CHECK_THROWS_AS(zeta_from_counts({12, 50}, 7, 1, 2), error);
  CHECK_THROWS_AS(zeta_from_counts({25}, 7, 1, 2), error);  // Weil bound

  auto g0 = zeta_from_counts({}, 7, 0, 4);
  CHECK(poly_str_signed(g0.numerator, "T") == "1");
  CHECK(g0.class_number == 1);
  CHECK(g0.place_counts == std::vector<BigInt>{8, 21, 112, 588});
  CHECK_THROWS_AS(zeta_from_counts({9}, 7, 0, 1), error);
  CHECK_THROWS_AS(zeta_from_counts({12}, 7, 2, 1), error);
}

TEST_CASE("quadratic character values") {
  auto f7 = F7();
  auto f = xpoly(f7, "x^3 + 1");
  CHECK(quad_character(f, make_place(xpoly(f7, "x"))) == 1);
  CHECK(quad_character(f, make_place(xpoly(f7, "x + 6"))) == 1);   // f(1) = 2
  CHECK(quad_character(f, make_place(xpoly(f7, "x + 1"))) == 0);   // f(-1) = 0
  CHECK(quad_character(f, infinite_place(f7)) == 0);               // odd degree
  CHECK(quad_character(xpoly(f7, "x^4 + x + 1"), infinite_place(f7)) == 1);
  CHECK(quad_character(xpoly(f7, "3*x^4 + x + 1"), infinite_place(f7)) == -1);
  CHECK(quad_character(xpoly(f7, "x + 4"), make_place(xpoly(f7, "x + 1"))) == -1);  // f(-1) = 3, a non-square
}

TEST_CASE("quadratic L-polynomials match the frozen table") {
  auto f7 = F7();
  auto L = [&](const std::string& s) { return coeffs(quad_lfun(xpoly(f7, s))); };
  using V = std::vector<BigInt>;
  CHECK(L("x^3 + 1") == V{1, 4, 7});
  CHECK(L("x^3 + 3*x + 1") == V{1, 4, 7});
  CHECK(L("x^3 + x") == V{1, 0, 7});
  CHECK(L("x^3 + 3*x") == V{1, 0, 7});
  CHECK(L("x^4 + x + 1") == V{1, 4, 7});
  CHECK(L("3*x^4 + x + 1") == V{1, -2, 7});
  // genus 2, both infinite-place behaviors
  CHECK(coeffs(quad_lfun(xpoly(f7, "x^5 + x + 2"), 4)) == V{1, 2, 0, 14, 49});
  CHECK(coeffs(quad_lfun(xpoly(f7, "3*x^6 + x + 2"), 4)) == V{1, 1, -2, 7, 49});

  CHECK_THROWS_AS(quad_lfun(xpoly(f7, "x^5 + x + 1")), error);  // not squarefree
  CHECK_THROWS_AS(quad_lfun(xpoly(f7, "3")), error);
  auto f2 = FqField::make(2);
  CHECK_THROWS_AS(quad_lfun(parse_univariate("x^3 + x + 1", cx(f2))), error);
}

TEST_CASE("motivating biquadratic identity") {
  auto f7 = F7();
  auto rep = motivating_example_check(xpoly(f7, "x"), xpoly(f7, "x + 6"));
  CHECK(coeffs(rep.l_f1) == std::vector<BigInt>{1});
  CHECK(coeffs(rep.l_f2) == std::vector<BigInt>{1});
  CHECK(coeffs(rep.l_f1f2) == std::vector<BigInt>{1});
  CHECK(coeffs(rep.induced_product) == std::vector<BigInt>{1});
  CHECK(rep.pole_order_zeta == 1);
  CHECK(rep.pole_order_lfun == 0);
  CHECK(rep.zeta_numerators_equal);

  // a curve pair: f1 = x^3 + 1 vs f2 = x^3 + 3x + 1 share a zeta numerator
  auto rep2 = motivating_example_check(xpoly(f7, "x^3 + 1"), xpoly(f7, "x^3 + 3*x + 1"), 4);
  CHECK(rep2.zeta_numerators_equal);
  CHECK(rep2.induced_product == rep2.l_f1 * rep2.l_f1f2);
  CHECK(rep2.l_f1f2.degree() == 4);  // sqfree(f1*f2) has degree 6, genus 2

  CHECK_THROWS_AS(motivating_example_check(xpoly(f7, "x"), xpoly(f7, "x")), error);
  CHECK_THROWS_AS(motivating_example_check(xpoly(f7, "4*x"), xpoly(f7, "x")), error);
  auto f5 = FqField::make(5);
  CHECK_THROWS_AS(
      motivating_example_check(xpoly(f7, "x"), parse_univariate("x", cx(f5))), error);
}

TEST_CASE("ray class orders and parameter choices") {
  auto r = ray_class_order(12, 7, 2, 3);
  CHECK(r.order == 96);
  CHECK(r.divisible);
  auto r2 = ray_class_order(1, 7, 4, 5);
  CHECK(r2.order == 400);
  CHECK(r2.divisible);
  auto r3 = ray_class_order(1, 7, 3, 5);  // T not a multiple of l-1
  CHECK(r3.order == 57);
  CHECK_FALSE(r3.divisible);
  CHECK_FALSE(ray_class_order(1, 7, 1, 5).divisible);
  CHECK_THROWS_AS(ray_class_order(0, 7, 1, 0), error);

  CHECK(choose_parameters(7, 7, 4, 12).ell == 5);
  CHECK(choose_parameters(7, 49, 168, 1).ell == 5);
  CHECK(choose_parameters(29, 29, 168, 1).ell == 5);
  CHECK(choose_parameters(5, 5, 6, 1).ell == 7);
  CHECK(choose_parameters(7, 7, 4, 12).t_degree_multiple == 4);
  CHECK_THROWS_AS(choose_parameters(6, 6, 1, 1), error);

  // the chosen l always divides the ray class order once T = l - 1
  for (auto [p, q, n, h] : std::vector<std::array<uint64_t, 4>>{
           {7, 7, 4, 12}, {7, 49, 168, 1}, {29, 29, 168, 1}, {5, 5, 6, 1}, {3, 9, 60, 2}}) {
    auto choice = choose_parameters(p, q, n, h);
    auto ord = ray_class_order(h, q, static_cast<unsigned>(choice.t_degree_multiple),
                               choice.ell);
    CHECK(ord.divisible);
  }
}

TEST_CASE("split prime search") {
  auto f7 = F7();
  auto k1 = curve(f7, "y^2 - x^3 - 1");
  CHECK(find_split_prime(k1, 1).str() == "x");

  auto nonsplit = curve(f7, "y^2 - 3");  // 3 is a non-square mod 7
  CHECK_THROWS_AS(find_split_prime(nonsplit, 1), error);
  CHECK(find_split_prime(nonsplit, 2).str() == "x^2 + 1");
  try {
    find_split_prime(nonsplit, 1);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_found);
  }
}
