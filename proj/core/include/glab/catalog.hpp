#pragma once

#include <vector>

#include "glab/group.hpp"
#include "glab/perm.hpp"

namespace glab {

/// Standard permutation realizations of the groups the checkers exercise.
/// Each constructor asserts the expected order after closure.

GroupPtr<Perm> make_cyclic(int n);
/// Direct product of cyclic groups acting on disjoint blocks of points.
GroupPtr<Perm> make_abelian(const std::vector<int>& orders);
GroupPtr<Perm> make_klein4();
GroupPtr<Perm> make_symmetric(int n);
GroupPtr<Perm> make_alternating(int n);
GroupPtr<Perm> make_dihedral(int n);  // order 2n on n points, n >= 3

/// The quaternion group in its regular representation (degree 8), with the
/// two generating units kept for building the subgroups <i> and <j>.
struct QuaternionData {
  GroupPtr<Perm> group;
  Perm i, j;
};
QuaternionData make_quaternion8();

/// PSL2(F_p) acting on the projective line (degree p+1, point p = infinity),
/// generated by x -> x+1 and x -> -1/x.  Odd primes p >= 5.
GroupPtr<Perm> make_psl2(int p);

}  // namespace glab
