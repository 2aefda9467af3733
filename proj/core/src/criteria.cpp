#include "glab/criteria.hpp"

#include <sstream>

#include "glab/error.hpp"
#include "glab/irreducibles.hpp"

namespace glab {

std::string CriteriaReport::text() const {
  std::ostringstream os;
  os << "condition1=" << (condition1 ? "true" : "false")
     << " condition2=" << (condition2 ? "true" : "false")
     << " condition3=" << (condition3 ? "true" : "false");
  return os.str();
}

CriteriaReport equivalence_criteria_check(const Realized<Perm>& H,
                                          const ClassFunction<Perm>& alpha,
                                          const Realized<Perm>& H2,
                                          const ClassFunction<Perm>& alpha2) {
  const GroupPtr<Perm>& G = H.sub.parent;
  if (H2.sub.parent != G)
    throw error(errc::group_mismatch, "subgroups of different parent groups");
  if (alpha.group() != H.grp || alpha2.group() != H2.grp)
    throw error(errc::group_mismatch, "character does not live on its subgroup");
  if (!is_plausible_character(alpha) || !is_plausible_character(alpha2))
    throw error(errc::not_a_character, "inputs must be characters");

  CriteriaReport rep;
  ClassFunction<Perm> psi = induce(H, alpha);
  ClassFunction<Perm> psi2 = induce(H2, alpha2);
  rep.condition3 = psi == psi2;

  int64_t aa = inner_product_int(psi, psi);
  int64_t ab = inner_product_int(psi, psi2);
  int64_t ba = inner_product_int(psi2, psi);
  int64_t bb = inner_product_int(psi2, psi2);
  rep.condition2 = aa == ab && ab == ba && ba == bb;
  rep.norm2_diff = aa - ab - ba + bb;

  rep.condition1 = true;
  const ClassFunction<Perm> one_h = ClassFunction<Perm>::trivial(H.grp);
  const ClassFunction<Perm> one_h2 = ClassFunction<Perm>::trivial(H2.grp);
  for (const auto& rho : irreducible_list(G)) {
    int64_t m1 = inner_product_int(alpha * restrict_to(rho, H), one_h);
    int64_t m2 = inner_product_int(alpha2 * restrict_to(rho, H2), one_h2);
    rep.pole_orders.push_back({m1, m2});
    if (m1 != m2) rep.condition1 = false;
  }
  return rep;
}

}  // namespace glab
