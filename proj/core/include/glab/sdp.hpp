#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glab/group.hpp"
#include "glab/perm.hpp"

namespace glab {

/// Element (c, g) of C_l^n x| G where G permutes the n coordinates through a
/// fixed coset action.  `act` is the coordinate permutation induced by g; it
/// is carried alongside g so multiplication needs no global lookup.
struct SdpElement {
  int64_t l = 1;
  std::vector<int> c;  // coordinates in [0, l)
  Perm g;
  Perm act;

  friend SdpElement operator*(const SdpElement& a, const SdpElement& b);
  SdpElement inverse() const;

  friend bool operator==(const SdpElement& a, const SdpElement& b) {
    return a.l == b.l && a.c == b.c && a.g == b.g;
  }
  friend bool operator!=(const SdpElement& a, const SdpElement& b) { return !(a == b); }
  friend bool operator<(const SdpElement& a, const SdpElement& b) {
    if (a.c != b.c) return a.c < b.c;
    return a.g < b.g;
  }

  std::size_t hash() const;
  std::string str() const;  // "((1,0,2); (0 1))"
};

/// The product C_l^n x| G built from the coset action of G on G/H, together
/// with the distinguished subgroup C_l^n x| H and the embedding of G.
struct SemidirectData {
  GroupPtr<Perm> base;        // G
  Subgroup<Perm> base_sub;    // H
  int64_t l = 0;
  int n = 0;                  // [G:H]
  CosetAction<Perm> act;
  GroupPtr<SdpElement> big;   // G~
  Subgroup<SdpElement> sub;   // H~
  std::vector<int> embed;     // index in G -> index of (0; g) in G~
};

/// Constructs C_l^n x| G for l an odd prime, n = [G:H].  The kernel-and-
/// quotient structure is asserted: |G~| = l^n |G| and |H~| = l^n |H|.
SemidirectData semidirect_product(const GroupPtr<Perm>& G, const Subgroup<Perm>& H,
                                  int64_t l, std::size_t bound = kDefaultOrderBound);

}  // namespace glab

template <>
struct std::hash<glab::SdpElement> {
  std::size_t operator()(const glab::SdpElement& e) const noexcept { return e.hash(); }
};
