#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glab/classfn.hpp"
#include "glab/sdp.hpp"

namespace glab {

/// The distinguished monomial pair: the twisted product C_l^n x| G, its
/// subgroup C_l^n x| H realized as a group, the degree-1 character
/// chi((c,h)) = zeta_l^{c_1} (verified to be a homomorphism), and Ind chi.
struct MonomialSetup {
  SemidirectData sdp;
  Realized<SdpElement> H;
  ClassFunction<SdpElement> chi;
  ClassFunction<SdpElement> ind_chi;
};

MonomialSetup make_monomial(const GroupPtr<Perm>& G, const Subgroup<Perm>& Hsub,
                            int64_t l, std::size_t bound = 5000);

/// Exhaustive rigidity check: every conjugacy class of index-n subgroups of
/// the twisted product, and every degree-1 character of each, is tested; when
/// the induced character equals Ind chi the pair must be conjugate to
/// (H~, chi).  `violations` counts induced-equal subgroups not conjugate to
/// H~ (the headline claim); `strict_violations` additionally requires some
/// conjugation to carry the character onto chi.
struct RigidityReport {
  int classes = 0;
  int chars = 0;
  int matches = 0;
  int violations = 0;
  int strict_violations = 0;
  std::string first_violation;
  std::string text() const;
};

RigidityReport monomial_rigidity_verify(const MonomialSetup& M);

/// Materializes the induced-representation matrix of psi = Ind chi at the
/// kernel generator alpha = (zeta at coordinate 1; identity) on the coset
/// basis, checks it is diag(zeta, 1, ..., 1), and certifies that its trace
/// n-1+zeta is not a sum of n-2 l-th roots of unity (bounded enumeration of
/// root-of-unity multisets).
struct DiagonalReport {
  int n = 0;
  int64_t l = 0;
  std::vector<std::vector<CycloNum>> matrix;
  bool diagonal_ok = false;
  CycloNum trace;
  bool trace_matches = false;   // trace == n-1+zeta
  bool isolation_ok = false;    // no smaller root-of-unity sum reaches it
  uint64_t multisets_checked = 0;
  std::string text() const;
};

DiagonalReport diagonal_evidence(const MonomialSetup& M);

}  // namespace glab
