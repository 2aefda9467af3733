#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "glab/classfn.hpp"
#include "glab/group.hpp"

namespace glab {

template <class E>
struct GassmannReport {
  GroupPtr<E> group;
  bool equivalent = false;
  bool trivial = false;                           // the subgroups are conjugate
  int witness = -1;                               // conjugating element if so
  std::vector<std::array<uint64_t, 2>> counts;    // |[c] cap H|, |[c] cap H2|
  int first_mismatch = -1;                        // class index, -1 when equal

  /// One line per class: "class <rep> countH=<k> countH2=<k>".
  std::string text() const {
    std::ostringstream os;
    auto reps = group->class_reps();
    for (std::size_t c = 0; c < counts.size(); ++c)
      os << "class " << group->element(reps[c]).str() << " countH=" << counts[c][0]
         << " countH2=" << counts[c][1] << "\n";
    os << "equivalent=" << (equivalent ? "true" : "false")
       << " trivial=" << (trivial ? "true" : "false") << "\n";
    return os.str();
  }
};

/// Per-class intersection counting, cross-asserted against the character
/// criterion Ind 1_H = Ind 1_H2 (the two must agree; a disagreement would be
/// an arithmetic bug, not a mathematical possibility).
template <class E>
GassmannReport<E> gassmann_test(const GroupPtr<E>& G, const Subgroup<E>& H,
                                const Subgroup<E>& H2) {
  if (H.parent != G || H2.parent != G)
    throw error(errc::not_a_subgroup, "subgroup of a different group");
  GassmannReport<E> rep;
  rep.group = G;
  rep.counts.assign(G->classes().size(), {0, 0});
  for (int h : H.elems) ++rep.counts[static_cast<std::size_t>(G->class_of(h))][0];
  for (int h : H2.elems) ++rep.counts[static_cast<std::size_t>(G->class_of(h))][1];
  rep.equivalent = true;
  for (std::size_t c = 0; c < rep.counts.size(); ++c)
    if (rep.counts[c][0] != rep.counts[c][1]) {
      rep.equivalent = false;
      rep.first_mismatch = static_cast<int>(c);
      break;
    }

  Realized<E> RH = realize(H), RH2 = realize(H2);
  bool char_equal = induce(RH, ClassFunction<E>::trivial(RH.grp)) ==
                    induce(RH2, ClassFunction<E>::trivial(RH2.grp));
  if (char_equal != rep.equivalent)
    throw error(errc::unsupported,
                "intersection counts and induced characters disagree");

  rep.witness = conjugating_element(H, H2);
  rep.trivial = rep.witness >= 0;
  return rep;
}

template <class E>
struct GassmannScan {
  std::size_t pairs = 0;
  std::vector<std::pair<Subgroup<E>, Subgroup<E>>> nontrivial;
};

/// Tests every unordered pair of distinct subgroup-class representatives of
/// equal order; collects the equivalent-but-nonconjugate pairs.
template <class E>
GassmannScan<E> scan_gassmann_pairs(const GroupPtr<E>& G,
                                    const std::vector<Subgroup<E>>& classes) {
  GassmannScan<E> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i].order() != classes[j].order()) continue;
      ++out.pairs;
      GassmannReport<E> r = gassmann_test(G, classes[i], classes[j]);
      if (r.equivalent && !r.trivial) out.nontrivial.emplace_back(classes[i], classes[j]);
    }
  return out;
}

}  // namespace glab
