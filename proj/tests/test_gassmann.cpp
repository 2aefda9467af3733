#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "glab/catalog.hpp"
#include "glab/criteria.hpp"
#include "glab/error.hpp"
#include "glab/gassmann.hpp"
#include "glab/irreducibles.hpp"
#include "glab/monomial.hpp"

using namespace glab;

using CF = ClassFunction<Perm>;

TEST_CASE("conjugate subgroups are trivially equivalent") {
  auto s3 = make_symmetric(3);
  auto h1 = s3->subgroup({Perm::parse("(0 1)", 3)});
  auto h2 = s3->subgroup({Perm::parse("(0 2)", 3)});
  auto r = gassmann_test(s3, h1, h2);
  CHECK(r.equivalent);
  CHECK(r.trivial);
  CHECK(r.witness >= 0);
  CHECK(r.first_mismatch == -1);
  CHECK(r.text().find("equivalent=true trivial=true") != std::string::npos);
  CHECK(r.text().find("countH=") != std::string::npos);
}

TEST_CASE("Klein four versus cyclic four inside S4") {
  auto s4 = make_symmetric(4);
  auto v4 = s4->subgroup({Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)});
  auto c4 = s4->subgroup({Perm::parse("(0 1 2 3)", 4)});
  REQUIRE(v4.order() == 4);
  REQUIRE(c4.order() == 4);
  auto r = gassmann_test(s4, v4, c4);
  CHECK(!r.equivalent);
  CHECK(!r.trivial);
  CHECK(r.first_mismatch >= 0);
}

TEST_CASE("index-7 pair in PSL(2,7) is equivalent but not conjugate") {
  auto g = make_psl2(7);
  auto classes = subgroup_classes_of_order(g, 24);
  REQUIRE(classes.size() == 2);
  auto r = gassmann_test(g, classes[0], classes[1]);
  CHECK(r.equivalent);
  CHECK(!r.trivial);
  CHECK(r.witness == -1);

  // intersection counts keyed by element order: 1 -> 1, 2 -> 9, 3 -> 8, 4 -> 6
  std::map<uint64_t, uint64_t> by_order;
  auto reps = g->class_reps();
  for (std::size_t c = 0; c < r.counts.size(); ++c) {
    CHECK(r.counts[c][0] == r.counts[c][1]);
    by_order[g->element_order(reps[c])] += r.counts[c][0];
  }
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 9);
  CHECK(by_order[3] == 8);
  CHECK(by_order[4] == 6);
  CHECK(by_order[7] == 0);

  auto scan = scan_gassmann_pairs(g, classes);
  CHECK(scan.pairs == 1);
  CHECK(scan.nontrivial.size() == 1);
}

TEST_CASE("small symmetric and alternating groups have no nontrivial pairs") {
  for (auto g : {make_symmetric(3), make_symmetric(4), make_alternating(4)}) {
    auto classes = subgroup_classes(g, all_subgroups(g));
    auto scan = scan_gassmann_pairs(g, classes);
    CHECK(scan.nontrivial.empty());
  }
}

TEST_CASE("quaternion contrast: equal induced characters, nonconjugate subgroups") {
  auto q8 = make_quaternion8();
  auto ha = q8.group->subgroup({q8.i});
  auto hb = q8.group->subgroup({q8.j});
  CHECK(!are_conjugate(ha, hb));

  // the two cyclic quarters are not even Gassmann equivalent
  CHECK(!gassmann_test(q8.group, ha, hb).equivalent);

  auto A = realize(ha), B = realize(hb);
  const CycloNum zeta4 = CycloNum::root_of_unity(4);
  auto faithful = [&](const Realized<Perm>& R, const Perm& gen) {
    for (const auto& c : abelian_characters(R.grp))
      if (c.at_element(R.local_of(R.sub.parent->index_of(gen))) == zeta4) return c;
    throw error(errc::unsupported, "no faithful character found");
  };
  CF chi_a = faithful(A, q8.i);
  CF chi_b = faithful(B, q8.j);

  // yet the twisted inductions coincide: both give the 2-dimensional character
  CF ind_a = induce(A, chi_a), ind_b = induce(B, chi_b);
  CHECK(ind_a == ind_b);
  CHECK(ind_a.degree() == CycloNum::integer(2));
  CHECK(inner_product_int(ind_a, ind_a) == 1);

  auto rep = equivalence_criteria_check(A, chi_a, B, chi_b);
  CHECK(rep.condition1);
  CHECK(rep.condition2);
  CHECK(rep.condition3);
  CHECK(rep.norm2_diff == 0);
  CHECK(rep.text() == "condition1=true condition2=true condition3=true");

  // with trivial characters instead, all three conditions fail together
  auto rep0 = equivalence_criteria_check(A, CF::trivial(A.grp), B, CF::trivial(B.grp));
  CHECK(!rep0.condition1);
  CHECK(!rep0.condition2);
  CHECK(!rep0.condition3);
  CHECK(rep0.norm2_diff > 0);
}

TEST_CASE("criteria pole orders satisfy Frobenius reciprocity") {
  auto s4 = make_symmetric(4);
  auto H = realize(s4->subgroup({Perm::parse("(0 1 2)", 4), Perm::parse("(0 1)", 4)}));
  auto K = realize(s4->subgroup({Perm::parse("(0 1 2 3)", 4), Perm::parse("(0 2)", 4)}));
  const auto& irr = irreducible_list(s4);
  const auto& hirr = irreducible_list(H.grp);
  CF alpha = hirr[hirr.size() - 1];
  CF beta = CF::trivial(K.grp);
  auto rep = equivalence_criteria_check(H, alpha, K, beta);
  REQUIRE(rep.pole_orders.size() == irr.size());
  for (std::size_t i = 0; i < irr.size(); ++i) {
    CHECK(rep.pole_orders[i][0] ==
          inner_product_int(induce(H, alpha), irr[i].dual()));
    CHECK(rep.pole_orders[i][1] ==
          inner_product_int(induce(K, beta), irr[i].dual()));
  }
}

TEST_CASE("criteria reject bad input") {
  auto s3 = make_symmetric(3);
  auto s4 = make_symmetric(4);
  auto H = realize(s3->subgroup({Perm::parse("(0 1)", 3)}));
  auto K = realize(s4->subgroup({Perm::parse("(0 1)", 4)}));
  CHECK_THROWS_AS(equivalence_criteria_check(H, CF::trivial(H.grp), K, CF::trivial(K.grp)),
                  error);
  CF half = CF::trivial(H.grp).scaled(Rat(1, 2));
  CHECK_THROWS_AS(equivalence_criteria_check(H, half, H, CF::trivial(H.grp)), error);
  CHECK_THROWS_AS(equivalence_criteria_check(H, CF::trivial(s3), H, CF::trivial(H.grp)),
                  error);
}

TEST_CASE("the three criteria agree on random instances") {
  std::mt19937 rng(20260819);
  std::vector<GroupPtr<Perm>> pool = {make_symmetric(3), make_symmetric(4),
                                      make_alternating(4), make_dihedral(4),
                                      make_quaternion8().group};
  std::vector<std::vector<Subgroup<Perm>>> subs;
  for (const auto& g : pool) subs.push_back(all_subgroups(g));

  int agree3 = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t pi = rng() % pool.size();
    const auto& list = subs[pi];
    const auto& s1 = list[rng() % list.size()];
    const auto& s2 = list[rng() % list.size()];
    auto H = realize(s1), K = realize(s2);

    auto random_char = [&](const GroupPtr<Perm>& grp) {
      const auto& irr = irreducible_list(grp);
      CF acc(grp, std::vector<CycloNum>(grp->classes().size()));
      bool nonzero = false;
      for (const auto& chi : irr) {
        int64_t c = static_cast<int64_t>(rng() % 3);
        if (c > 0) {
          acc = acc + chi.scaled(Rat(c));
          nonzero = true;
        }
      }
      return nonzero ? acc : CF::trivial(grp);
    };
    CF alpha = random_char(H.grp), beta = random_char(K.grp);
    auto rep = equivalence_criteria_check(H, alpha, K, beta);
    CHECK(rep.condition1 == rep.condition3);
    CHECK(rep.condition2 == rep.condition3);
    CHECK(rep.condition3 == (induce(H, alpha) == induce(K, beta)));
    CHECK((rep.norm2_diff == 0) == rep.condition2);
    if (rep.condition3) ++agree3;

    // transported characters over a conjugation witness always pass
    int w = conjugating_element(s1, s2);
    if (w >= 0) {
      CF moved = conjugate_transport(alpha, H, K, w);
      auto rep2 = equivalence_criteria_check(H, alpha, K, moved);
      CHECK(rep2.condition1);
      CHECK(rep2.condition2);
      CHECK(rep2.condition3);
    }
  }
  // both verdicts appear across the run
  CHECK(agree3 > 0);
  CHECK(agree3 < 120);
}

TEST_CASE("monomial setup for S3 over a transposition") {
  auto s3 = make_symmetric(3);
  auto h = s3->subgroup({Perm::parse("(0 1)", 3)});
  auto M = make_monomial(s3, h, 3);
  CHECK(M.sdp.big->order() == 162);
  CHECK(M.sdp.sub.order() == 54);
  CHECK(M.sdp.n == 3);
  CHECK(M.chi.degree() == CycloNum::integer(1));
  CHECK(is_plausible_character(M.chi));
  CHECK(M.ind_chi.degree() == CycloNum::integer(3));
  CHECK(M.ind_chi == induce(M.H, M.chi));

  SdpElement alpha;
  alpha.l = 3;
  alpha.c = {1, 0, 0};
  alpha.g = Perm::identity(3);
  alpha.act = Perm::identity(3);
  int ai = M.H.grp->index_of(alpha);
  REQUIRE(ai >= 0);
  CHECK(M.chi.at_element(ai) == CycloNum::root_of_unity(3));

  CHECK_THROWS_AS(make_monomial(s3, h, 2), error);
  CHECK_THROWS_AS(make_monomial(s3, h, 9), error);
  auto s4 = make_symmetric(4);
  CHECK_THROWS_AS(make_monomial(s4, s4->subgroup({Perm::parse("(0 1)", 4)}), 3),
                  error);
}

TEST_CASE("monomial rigidity holds in all three reference cases") {
  auto s3 = make_symmetric(3);

  auto M1 = make_monomial(s3, s3->subgroup({Perm::parse("(0 1)", 3)}), 3);
  auto r1 = monomial_rigidity_verify(M1);
  CHECK(r1.classes > 0);
  CHECK(r1.matches >= 1);
  CHECK(r1.violations == 0);
  CHECK(r1.strict_violations == 0);
  CHECK(r1.first_violation.empty());
  CHECK(r1.text().find("violations=0") != std::string::npos);

  auto c3 = make_cyclic(3);
  auto M2 = make_monomial(c3, c3->trivial_subgroup(), 3);
  CHECK(M2.sdp.big->order() == 81);
  auto r2 = monomial_rigidity_verify(M2);
  CHECK(r2.matches >= 1);
  CHECK(r2.violations == 0);
  CHECK(r2.strict_violations == 0);

  auto M3 = make_monomial(s3, s3->subgroup({Perm::parse("(0 1 2)", 3)}), 3);
  CHECK(M3.sdp.big->order() == 54);
  auto r3 = monomial_rigidity_verify(M3);
  CHECK(r3.matches >= 1);
  CHECK(r3.violations == 0);
  CHECK(r3.strict_violations == 0);
}

TEST_CASE("diagonal evidence isolates the twisted trace") {
  auto s3 = make_symmetric(3);
  auto M = make_monomial(s3, s3->subgroup({Perm::parse("(0 1)", 3)}), 3);
  auto d = diagonal_evidence(M);
  CHECK(d.n == 3);
  CHECK(d.l == 3);
  CHECK(d.diagonal_ok);
  const CycloNum zeta = CycloNum::root_of_unity(3);
  CHECK(d.matrix[0][0] == zeta);
  CHECK(d.matrix[1][1] == CycloNum::integer(1));
  CHECK(d.matrix[0][1].is_zero());
  CHECK(d.trace == CycloNum::integer(2) + zeta);
  CHECK(d.trace_matches);
  CHECK(d.isolation_ok);
  CHECK(d.multisets_checked == 3);
  CHECK(d.text().find("diagonal=true") != std::string::npos);

  // n = 2: the only candidate is the empty sum
  auto M2 = make_monomial(s3, s3->subgroup({Perm::parse("(0 1 2)", 3)}), 3);
  auto d2 = diagonal_evidence(M2);
  CHECK(d2.n == 2);
  CHECK(d2.diagonal_ok);
  CHECK(d2.trace == CycloNum::integer(1) + zeta);
  CHECK(d2.isolation_ok);
  CHECK(d2.multisets_checked == 1);
}

TEST_CASE("trace norm identity") {
  // |n-1+zeta|^2 - (n-2)^2 = (n-1) |1+zeta|^2 for any root of unity zeta
  for (int64_t l : {3, 5, 7, 11, 13})
    for (int64_t n = 2; n <= 6; ++n) {
      const CycloNum zeta = CycloNum::root_of_unity(static_cast<uint64_t>(l));
      CycloNum lhs = (CycloNum::integer(n - 1) + zeta).abs2() -
                     CycloNum::integer((n - 2) * (n - 2));
      CycloNum rhs =
          CycloNum::integer(n - 1) * (CycloNum::integer(1) + zeta).abs2();
      CHECK(lhs == rhs);
    }
}
