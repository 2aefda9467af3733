#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "glab/catalog.hpp"
#include "glab/classfn.hpp"
#include "glab/error.hpp"
#include "glab/irreducibles.hpp"

using namespace glab;

using CF = ClassFunction<Perm>;

static std::multiset<int64_t> degree_multiset(const GroupPtr<Perm>& G) {
  std::multiset<int64_t> out;
  for (const auto& chi : irreducible_list(G))
    out.insert(rat_to_int(chi.degree().to_rational()).convert_to<int64_t>());
  return out;
}

TEST_CASE("trivial character and inner products") {
  auto s3 = make_symmetric(3);
  CF one = CF::trivial(s3);
  CHECK(inner_product_int(one, one) == 1);
  CHECK(norm2(one) == CycloNum::integer(1));
  CHECK(one.dual() == one);
  CHECK((one * one) == one);
  CHECK((one - one).is_zero());
}

TEST_CASE("induction from a transposition in S3 gives the natural permutation character") {
  auto s3 = make_symmetric(3);
  auto H = realize(s3->subgroup({Perm::parse("(0 1)", 3)}));
  CF ind = induce(H, CF::trivial(H.grp));
  CHECK(ind.degree() == CycloNum::integer(3));
  CHECK(ind.at_element(s3->index_of(Perm::parse("(0 1)", 3))) == CycloNum::integer(1));
  CHECK(ind.at_element(s3->index_of(Perm::parse("(0 2)", 3))) == CycloNum::integer(1));
  CHECK(ind.at_element(s3->index_of(Perm::parse("(0 1 2)", 3))).is_zero());
  CHECK(is_plausible_character(ind));
  // 3 + 1 = natural character = trivial + standard, so norm2 = 2
  CHECK(inner_product_int(ind, ind) == 2);
  CHECK(inner_product_int(ind, CF::trivial(s3)) == 1);
}

TEST_CASE("induction from <i> in the quaternion group hits the 2-dimensional character") {
  auto q8 = make_quaternion8();
  auto H = realize(q8.group->subgroup({q8.i}));
  REQUIRE(H.grp->order() == 4);

  // pick the faithful character of <i> = C4 sending i to a primitive 4th root
  const CycloNum zeta4 = CycloNum::root_of_unity(4);
  CF chi = CF::trivial(H.grp);
  bool found = false;
  for (const auto& c : abelian_characters(H.grp)) {
    if (c.at_element(H.local_of(q8.group->index_of(q8.i))) == zeta4) {
      chi = c;
      found = true;
      break;
    }
  }
  REQUIRE(found);

  CF ind = induce(H, chi);
  int e = 0;
  int i_idx = q8.group->index_of(q8.i);
  int minus1 = q8.group->mul(i_idx, i_idx);
  int j_idx = q8.group->index_of(q8.j);
  int k_idx = q8.group->mul(i_idx, j_idx);
  CHECK(ind.at_element(e) == CycloNum::integer(2));
  CHECK(ind.at_element(minus1) == CycloNum::integer(-2));
  CHECK(ind.at_element(i_idx).is_zero());
  CHECK(ind.at_element(j_idx).is_zero());
  CHECK(ind.at_element(k_idx).is_zero());
  CHECK(inner_product_int(ind, ind) == 1);  // irreducible on the nose
}

TEST_CASE("irreducible degree multisets") {
  CHECK(degree_multiset(make_cyclic(6)) == std::multiset<int64_t>({1, 1, 1, 1, 1, 1}));
  CHECK(degree_multiset(make_klein4()) == std::multiset<int64_t>({1, 1, 1, 1}));
  CHECK(degree_multiset(make_symmetric(3)) == std::multiset<int64_t>({1, 1, 2}));
  CHECK(degree_multiset(make_dihedral(4)) == std::multiset<int64_t>({1, 1, 1, 1, 2}));
  CHECK(degree_multiset(make_quaternion8().group) ==
        std::multiset<int64_t>({1, 1, 1, 1, 2}));
  CHECK(degree_multiset(make_symmetric(4)) == std::multiset<int64_t>({1, 1, 2, 3, 3}));
  CHECK(degree_multiset(make_alternating(4)) == std::multiset<int64_t>({1, 1, 1, 3}));
  CHECK(degree_multiset(make_alternating(5)) == std::multiset<int64_t>({1, 3, 3, 4, 5}));
}

TEST_CASE("irreducible list is memoized and canonically ordered") {
  auto s4 = make_symmetric(4);
  const auto& a = irreducible_list(s4);
  const auto& b = irreducible_list(s4);
  CHECK(&a == &b);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    // sorted by degree
    Rat da = a[i].degree().to_rational(), db = a[i + 1].degree().to_rational();
    CHECK(da <= db);
  }
  // orthonormal as an external property
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      CHECK(inner_product_int(a[i], a[j]) == (i == j ? 1 : 0));
}

TEST_CASE("column orthogonality for S3") {
  auto s3 = make_symmetric(3);
  const auto& irr = irreducible_list(s3);
  const auto& classes = s3->classes();
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t d = 0; d < classes.size(); ++d) {
      CycloNum sum;
      for (const auto& chi : irr)
        sum += chi.at_class(static_cast<int>(c)) *
               chi.at_class(static_cast<int>(d)).conj();
      if (c == d)
        CHECK(sum == CycloNum::integer(static_cast<int64_t>(
                  s3->order() / classes[c].size())));
      else
        CHECK(sum.is_zero());
    }
}

TEST_CASE("Frobenius reciprocity for S3 inside S4") {
  auto s4 = make_symmetric(4);
  auto H = realize(s4->subgroup({Perm::parse("(0 1)", 4), Perm::parse("(1 2)", 4)}));
  REQUIRE(H.grp->order() == 6);
  for (const auto& chi : irreducible_list(H.grp))
    for (const auto& rho : irreducible_list(s4))
      CHECK(inner_product(induce(H, chi), rho) ==
            inner_product(chi, restrict_to(rho, H)));
}

TEST_CASE("Frobenius reciprocity for <i> inside the quaternion group") {
  auto q8 = make_quaternion8();
  auto H = realize(q8.group->subgroup({q8.i}));
  for (const auto& chi : irreducible_list(H.grp))
    for (const auto& rho : irreducible_list(q8.group))
      CHECK(inner_product(induce(H, chi), rho) ==
            inner_product(chi, restrict_to(rho, H)));
}

TEST_CASE("induction in stages through a dihedral middle term") {
  auto s4 = make_symmetric(4);
  Perm r = Perm::parse("(0 1 2 3)", 4), f = Perm::parse("(0 2)", 4);
  auto KinG = realize(s4->subgroup({r, f}));
  REQUIRE(KinG.grp->order() == 8);
  auto HinG = realize(s4->subgroup({f}));
  auto HinK = realize(KinG.grp->subgroup({f}));
  REQUIRE(HinG.grp->order() == 2);
  REQUIRE(HinK.grp->order() == 2);

  for (const auto& chi : abelian_characters(HinG.grp)) {
    // rebuild chi on the other copy of the order-2 group by matching elements
    std::vector<CycloNum> vals;
    for (int rep : HinK.grp->class_reps()) {
      const Perm& p = KinG.grp->element(HinK.parent_of(rep));
      vals.push_back(chi.at_element(HinG.local_of(s4->index_of(p))));
    }
    CF chi_k(HinK.grp, std::move(vals));
    CHECK(induce(HinG, chi) == induce(KinG, induce(HinK, chi_k)));
  }
}

TEST_CASE("projection formula") {
  auto run = [](const GroupPtr<Perm>& G, const Subgroup<Perm>& S) {
    auto H = realize(S);
    const auto& irr = irreducible_list(G);
    for (const auto& alpha : abelian_characters(H.grp)) {
      CF ind_alpha = induce(H, alpha);
      for (const auto& rho : irr) {
        // Ind(alpha * Res rho) = Ind(alpha) * rho
        CHECK(induce(H, alpha * restrict_to(rho, H)) == ind_alpha * rho);
        for (const auto& tau : irr)
          CHECK(inner_product(induce(H, alpha * restrict_to(rho, H)), tau) ==
                inner_product(ind_alpha, rho.dual() * tau));
      }
    }
  };
  auto s3 = make_symmetric(3);
  run(s3, s3->subgroup({Perm::parse("(0 1)", 3)}));
  auto q8 = make_quaternion8();
  run(q8.group, q8.group->subgroup({q8.i}));
}

TEST_CASE("abelian character certificates") {
  CHECK(abelian_characters(make_cyclic(6)).size() == 6);
  CHECK(abelian_characters(make_klein4()).size() == 4);
  CHECK(abelian_characters(make_symmetric(4)).size() == 2);
  CHECK(abelian_characters(make_quaternion8().group).size() == 4);
  CHECK(abelian_characters(make_alternating(4)).size() == 3);

  // each is a genuine norm-1 character and they are pairwise orthogonal
  auto chars = abelian_characters(make_cyclic(6));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    CHECK(is_plausible_character(chars[i]));
    for (std::size_t j = 0; j < chars.size(); ++j)
      CHECK(inner_product_int(chars[i], chars[j]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("transport along a conjugation witness") {
  auto s3 = make_symmetric(3);
  auto A = realize(s3->subgroup({Perm::parse("(0 1)", 3)}));
  auto B = realize(s3->subgroup({Perm::parse("(0 2)", 3)}));
  int g = conjugating_element(A.sub, B.sub);
  REQUIRE(g >= 0);

  // the sign character of A transports to the sign character of B
  CF sgn_a = CF::trivial(A.grp);
  for (const auto& c : abelian_characters(A.grp))
    if (c.at_element(A.local_of(s3->index_of(Perm::parse("(0 1)", 3)))) ==
        CycloNum::integer(-1))
      sgn_a = c;
  CF moved = conjugate_transport(sgn_a, A, B, g);
  CHECK(moved.at_element(B.local_of(s3->index_of(Perm::parse("(0 2)", 3)))) ==
        CycloNum::integer(-1));
  CHECK(moved.degree() == CycloNum::integer(1));

  // induced characters agree, as they must for conjugate subgroups
  CHECK(induce(A, sgn_a) == induce(B, moved));

  // a bogus witness is rejected
  CHECK_THROWS_AS(conjugate_transport(sgn_a, A, A, g), error);
}

TEST_CASE("plausibility filter") {
  auto s3 = make_symmetric(3);
  const auto& irr = irreducible_list(s3);
  for (const auto& chi : irr) CHECK(is_plausible_character(chi));
  CHECK(is_plausible_character(irr[0] + irr[2]));
  CHECK(!is_plausible_character(irr[2].scaled(Rat(1, 2))));
  CHECK(!is_plausible_character(irr[0] - irr[1] - irr[2]));  // negative degree
  CHECK(!is_plausible_character(CF(s3, {CycloNum::integer(0), CycloNum::integer(0),
                                        CycloNum::integer(0)})));

  // values must satisfy chi(g^{-1}) = conj(chi(g))
  auto c3 = make_cyclic(3);
  const CycloNum z = CycloNum::root_of_unity(3);
  CHECK(!is_plausible_character(CF(c3, {CycloNum::integer(1), z, z})));
  CHECK(is_plausible_character(CF(c3, {CycloNum::integer(1), z, z.conj()})));
}

TEST_CASE("degree of an induced character scales by the index") {
  auto s4 = make_symmetric(4);
  auto H = realize(s4->subgroup({Perm::parse("(0 1 2 3)", 4)}));
  for (const auto& chi : irreducible_list(H.grp))
    CHECK(induce(H, chi).degree() ==
          CycloNum::integer(static_cast<int64_t>(H.sub.index())) * chi.degree());
}

TEST_CASE("PSL(2,7) character degrees") {
  CHECK(degree_multiset(make_psl2(7)) == std::multiset<int64_t>({1, 3, 3, 6, 7, 8}));
}
