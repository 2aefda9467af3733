#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "glab/cyclo.hpp"
#include "glab/error.hpp"
#include "glab/group.hpp"
#include "glab/rational.hpp"

namespace glab {

/// Class function on a group: one exact cyclotomic value per conjugacy class.
/// Characters, virtual characters and their tensor/induced/restricted images
/// all live here; "isomorphic representations" means equal ClassFunctions.
template <class E>
class ClassFunction {
 public:
  ClassFunction(GroupPtr<E> G, std::vector<CycloNum> values)
      : grp_(std::move(G)), vals_(std::move(values)) {
    if (vals_.size() != grp_->classes().size())
      throw error(errc::group_mismatch, "one value per conjugacy class required");
  }

  static ClassFunction trivial(const GroupPtr<E>& G) {
    return ClassFunction(
        G, std::vector<CycloNum>(G->classes().size(), CycloNum::integer(1)));
  }

  const GroupPtr<E>& group() const { return grp_; }
  const std::vector<CycloNum>& values() const { return vals_; }
  const CycloNum& at_class(int c) const { return vals_[static_cast<std::size_t>(c)]; }
  const CycloNum& at_element(int i) const {
    return vals_[static_cast<std::size_t>(grp_->class_of(i))];
  }
  const CycloNum& degree() const { return vals_[0]; }

  bool is_zero() const {
    return std::all_of(vals_.begin(), vals_.end(),
                       [](const CycloNum& v) { return v.is_zero(); });
  }

  ClassFunction dual() const {  // complex conjugate character
    std::vector<CycloNum> v;
    v.reserve(vals_.size());
    for (const auto& x : vals_) v.push_back(x.conj());
    return ClassFunction(grp_, std::move(v));
  }

  ClassFunction scaled(const Rat& k) const {
    std::vector<CycloNum> v;
    v.reserve(vals_.size());
    for (const auto& x : vals_) v.push_back(x.scaled(k));
    return ClassFunction(grp_, std::move(v));
  }

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    check_same(a, b);
    std::vector<CycloNum> v;
    v.reserve(a.vals_.size());
    for (std::size_t i = 0; i < a.vals_.size(); ++i) v.push_back(a.vals_[i] + b.vals_[i]);
    return ClassFunction(a.grp_, std::move(v));
  }
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    check_same(a, b);
    std::vector<CycloNum> v;
    v.reserve(a.vals_.size());
    for (std::size_t i = 0; i < a.vals_.size(); ++i) v.push_back(a.vals_[i] - b.vals_[i]);
    return ClassFunction(a.grp_, std::move(v));
  }
  /// Tensor product: pointwise multiplication of traces.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    check_same(a, b);
    std::vector<CycloNum> v;
    v.reserve(a.vals_.size());
    for (std::size_t i = 0; i < a.vals_.size(); ++i) v.push_back(a.vals_[i] * b.vals_[i]);
    return ClassFunction(a.grp_, std::move(v));
  }
  ClassFunction operator-() const {
    std::vector<CycloNum> v;
    v.reserve(vals_.size());
    for (const auto& x : vals_) v.push_back(-x);
    return ClassFunction(grp_, std::move(v));
  }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    check_same(a, b);
    return a.vals_ == b.vals_;
  }
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) {
    return !(a == b);
  }

 private:
  static void check_same(const ClassFunction& a, const ClassFunction& b) {
    if (a.grp_ != b.grp_)
      throw error(errc::group_mismatch, "class functions on different groups");
  }

  GroupPtr<E> grp_;
  std::vector<CycloNum> vals_;
};

/// <a, b> = (1/|G|) sum_g a(g) conj(b(g)), accumulated per class.
template <class E>
CycloNum inner_product(const ClassFunction<E>& a, const ClassFunction<E>& b) {
  if (a.group() != b.group())
    throw error(errc::group_mismatch, "inner product across different groups");
  const auto& classes = a.group()->classes();
  CycloNum sum;
  for (std::size_t c = 0; c < classes.size(); ++c)
    sum += (a.at_class(static_cast<int>(c)) * b.at_class(static_cast<int>(c)).conj())
               .scaled(Rat(static_cast<int64_t>(classes[c].size())));
  return sum.scaled(Rat(1, static_cast<int64_t>(a.group()->order())));
}

template <class E>
CycloNum norm2(const ClassFunction<E>& f) {
  return inner_product(f, f);
}

/// Inner product that must come out as a rational integer (virtual characters
/// against irreducibles); throws otherwise.
template <class E>
int64_t inner_product_int(const ClassFunction<E>& a, const ClassFunction<E>& b) {
  CycloNum v = inner_product(a, b);
  if (!v.is_rational() || !rat_is_integer(v.to_rational()))
    throw error(errc::unsupported, "inner product is not a rational integer");
  return rat_to_int(v.to_rational()).convert_to<int64_t>();
}

// --- subgroups as groups in their own right ---------------------------------

/// A subgroup rebuilt as a standalone Group so that it has its own conjugacy
/// classes and class functions; to_parent maps its element indices back.
template <class E>
struct Realized {
  Subgroup<E> sub;
  GroupPtr<E> grp;
  std::vector<int> to_parent;

  int parent_of(int i) const { return to_parent[static_cast<std::size_t>(i)]; }
  int local_of(int parent_idx) const {
    int i = grp->index_of(sub.parent->element(parent_idx));
    if (i < 0) throw error(errc::not_a_subgroup, "element outside the subgroup");
    return i;
  }
};

/// Small deterministic generating set: greedily absorb the first element not
/// yet generated.  Size is at most log2 of the order.
template <class E>
std::vector<int> small_genset(const Subgroup<E>& S) {
  std::vector<int> gens;
  std::vector<int> cur{0};
  while (cur.size() < S.elems.size()) {
    for (int e : S.elems)
      if (!std::binary_search(cur.begin(), cur.end(), e)) {
        gens.push_back(e);
        break;
      }
    cur = S.parent->subgroup_by_indices(gens).elems;
  }
  return gens;
}

template <class E>
Realized<E> realize(const Subgroup<E>& S) {
  Realized<E> r;
  r.sub = S;
  std::vector<E> gens;
  for (int i : small_genset(S)) gens.push_back(S.parent->element(i));
  r.grp = Group<E>::closure(S.parent->element(0), std::move(gens));
  if (r.grp->order() != S.elems.size())
    throw error(errc::unsupported, "realized subgroup has wrong order");
  r.to_parent.reserve(r.grp->order());
  for (const E& e : r.grp->elements()) r.to_parent.push_back(S.parent->index_of(e));
  return r;
}

// --- induction and restriction ----------------------------------------------

/// Frobenius induced class function: on a parent class [g],
///   (Ind chi)(g) = (|G| / (|H| |[g]|)) * sum over [g] cap H of chi.
template <class E>
ClassFunction<E> induce(const Realized<E>& H, const ClassFunction<E>& chi) {
  if (chi.group() != H.grp)
    throw error(errc::group_mismatch, "character does not live on the subgroup");
  const GroupPtr<E>& G = H.sub.parent;
  const auto& classes = G->classes();
  std::vector<CycloNum> sums(classes.size());
  for (std::size_t i = 0; i < H.grp->order(); ++i) {
    int p = H.parent_of(static_cast<int>(i));
    sums[static_cast<std::size_t>(G->class_of(p))] += chi.at_element(static_cast<int>(i));
  }
  std::vector<CycloNum> vals;
  vals.reserve(classes.size());
  const int64_t ord_g = static_cast<int64_t>(G->order());
  const int64_t ord_h = static_cast<int64_t>(H.grp->order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    vals.push_back(
        sums[c].scaled(Rat(ord_g, ord_h * static_cast<int64_t>(classes[c].size()))));
  return ClassFunction<E>(G, std::move(vals));
}

template <class E>
ClassFunction<E> restrict_to(const ClassFunction<E>& f, const Realized<E>& H) {
  if (f.group() != H.sub.parent)
    throw error(errc::group_mismatch, "function does not live on the parent group");
  std::vector<CycloNum> vals;
  for (int rep : H.grp->class_reps()) vals.push_back(f.at_element(H.parent_of(rep)));
  return ClassFunction<E>(H.grp, std::move(vals));
}

/// Transport of a class function along conjugation: B = g A g^{-1} in the
/// common parent, and (transport chi)(x) = chi(g^{-1} x g).
template <class E>
ClassFunction<E> conjugate_transport(const ClassFunction<E>& chi, const Realized<E>& A,
                                     const Realized<E>& B, int g) {
  if (chi.group() != A.grp)
    throw error(errc::group_mismatch, "function does not live on the source subgroup");
  const GroupPtr<E>& G = A.sub.parent;
  if (B.sub.parent != G) throw error(errc::group_mismatch, "different parent groups");
  if (conjugate_set(*G, A.sub.elems, g) != B.sub.elems)
    throw error(errc::group_mismatch, "conjugation witness does not map A to B");
  std::vector<CycloNum> vals;
  for (int rep : B.grp->class_reps()) {
    int x = G->conjugate(G->inv(g), B.parent_of(rep));
    vals.push_back(chi.at_element(A.local_of(x)));
  }
  return ClassFunction<E>(B.grp, std::move(vals));
}

// --- abelian characters ------------------------------------------------------

/// All degree-1 characters of G (characters of the abelianization), found by
/// assigning to each generator a root of unity of compatible order and
/// checking consistency over every Cayley edge.  Certified complete against
/// the index of the derived subgroup.
template <class E>
std::vector<ClassFunction<E>> abelian_characters(const GroupPtr<E>& G) {
  const std::size_t target = G->order() / commutator_subgroup(G).order();
  const std::size_t ngens = G->generators().size();
  std::vector<int> gidx(ngens);
  std::vector<uint64_t> ords(ngens);
  uint64_t combos = 1;
  for (std::size_t i = 0; i < ngens; ++i) {
    gidx[i] = G->trans(0, static_cast<int>(i));
    ords[i] = G->element_order(gidx[i]);
    if (combos > 1000000 / std::max<uint64_t>(ords[i], 1))
      throw error(errc::enumeration_bound_exceeded,
                  "too many generator value assignments");
    combos *= ords[i];
  }

  std::vector<ClassFunction<E>> out;
  std::vector<uint64_t> k(ngens, 0);
  std::vector<CycloNum> vals(G->order());
  std::vector<char> seen(G->order());
  for (uint64_t step = 0; step < combos; ++step) {
    std::vector<CycloNum> genvals(ngens);
    for (std::size_t i = 0; i < ngens; ++i)
      genvals[i] = CycloNum::root_of_unity(ords[i], static_cast<int64_t>(k[i]));
    std::fill(seen.begin(), seen.end(), 0);
    vals[0] = CycloNum::integer(1);
    seen[0] = 1;
    bool ok = true;
    // Elements are indexed in BFS discovery order, so vals[i] is always set
    // before row i is used to extend.
    for (std::size_t i = 0; i < G->order() && ok; ++i) {
      for (std::size_t gi = 0; gi < ngens && ok; ++gi) {
        int t = G->trans(static_cast<int>(i), static_cast<int>(gi));
        CycloNum v = vals[i] * genvals[gi];
        if (!seen[static_cast<std::size_t>(t)]) {
          vals[static_cast<std::size_t>(t)] = std::move(v);
          seen[static_cast<std::size_t>(t)] = 1;
        } else if (vals[static_cast<std::size_t>(t)] != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<CycloNum> cvals;
      for (int rep : G->class_reps()) cvals.push_back(vals[static_cast<std::size_t>(rep)]);
      out.emplace_back(G, std::move(cvals));
    }
    for (std::size_t i = 0; i < ngens; ++i) {  // mixed-radix increment
      if (++k[i] < ords[i]) break;
      k[i] = 0;
    }
  }
  if (out.size() != target)
    throw error(errc::unsupported, "abelian character count disagrees with [G:[G,G]]");
  return out;
}

/// Character test used for input validation: degree a positive integer, all
/// values algebraic integers, conjugate-symmetric under inversion, and norm a
/// positive rational integer.  (Necessary conditions; they catch the
/// malformed inputs the checkers care about.)
template <class E>
bool is_plausible_character(const ClassFunction<E>& f) {
  const CycloNum& d = f.degree();
  if (!d.is_rational() || !rat_is_integer(d.to_rational()) || d.to_rational() <= 0)
    return false;
  const auto reps = f.group()->class_reps();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (!f.at_class(static_cast<int>(c)).is_integral()) return false;
    int invc = f.group()->class_of(f.group()->inv(reps[c]));
    if (f.at_class(invc) != f.at_class(static_cast<int>(c)).conj()) return false;
  }
  CycloNum n = norm2(f);
  return n.is_rational() && rat_is_integer(n.to_rational()) && n.to_rational() > 0;
}

}  // namespace glab
