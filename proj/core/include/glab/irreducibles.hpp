#pragma once

#include <vector>

#include "glab/classfn.hpp"
#include "glab/group.hpp"
#include "glab/perm.hpp"

namespace glab {

/// The full list of irreducible characters of G, sorted by degree then value
/// order.  Obtained by the abelian enumeration, the symmetric-group tower of
/// permutation characters, or decomposition of characters induced from cyclic
/// and low-index subgroups; validated by orthonormality and sum of squared
/// degrees = |G| before being returned (and cached per group).
/// Throws IncompleteDecomposition when the decomposition cannot be finished.
const std::vector<ClassFunction<Perm>>& irreducible_list(const GroupPtr<Perm>& G);

}  // namespace glab
