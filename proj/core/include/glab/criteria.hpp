#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "glab/classfn.hpp"
#include "glab/perm.hpp"

namespace glab {

/// Joint verdict of the three equivalent criteria for equality of the induced
/// characters psi = Ind alpha and psi' = Ind alpha':
///   1. for every irreducible rho of the parent, the multiplicity-style
///      invariants <alpha (x) Res rho, 1>_H and <alpha' (x) Res rho, 1>_H'
///      agree (the orders of the L-function poles, recast character-wise);
///   2. <psi,psi> = <psi,psi'> = <psi',psi> = <psi',psi'>;
///   3. psi = psi' as class functions.
/// The three booleans are computed independently; their agreement is a
/// theorem, which the tests assert rather than assume.
struct CriteriaReport {
  bool condition1 = false;
  bool condition2 = false;
  bool condition3 = false;
  int64_t norm2_diff = 0;  // <psi - psi', psi - psi'>
  std::vector<std::array<int64_t, 2>> pole_orders;  // per irreducible
  std::string text() const;  // "condition1=<bool> condition2=<bool> condition3=<bool>"
};

CriteriaReport equivalence_criteria_check(const Realized<Perm>& H,
                                          const ClassFunction<Perm>& alpha,
                                          const Realized<Perm>& H2,
                                          const ClassFunction<Perm>& alpha2);

}  // namespace glab
