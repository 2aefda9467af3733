#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>
#include <vector>

#include "glab/error.hpp"
#include "glab/perm.hpp"

namespace glab {

inline constexpr std::size_t kDefaultOrderBound = 1000000;
inline constexpr std::size_t kMultTableMax = 1024;

template <class E>
class Group;
template <class E>
using GroupPtr = std::shared_ptr<const Group<E>>;

/// Subgroup as a sorted list of element indices into the parent group.
template <class E>
struct Subgroup {
  GroupPtr<E> parent;
  std::vector<int> elems;  // sorted, closed, contains index 0 (the identity)

  std::size_t order() const { return elems.size(); }
  std::size_t index() const { return parent->order() / elems.size(); }
  bool contains(int idx) const {
    return std::binary_search(elems.begin(), elems.end(), idx);
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elems == b.elems;
  }
};

/// Finite group built as the closure of a generator list.  Immutable after
/// construction; element 0 is the identity; element order is the (stable)
/// breadth-first discovery order.
template <class E>
class Group : public std::enable_shared_from_this<Group<E>> {
 public:
  static GroupPtr<E> closure(const E& identity, std::vector<E> gens,
                             std::size_t bound = kDefaultOrderBound) {
    auto g = GroupPtr<E>(new Group(identity, std::move(gens), bound));
    return g;
  }

  std::size_t order() const { return elems_.size(); }
  const std::vector<E>& elements() const { return elems_; }
  const E& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  const std::vector<E>& generators() const { return gens_; }

  /// Index of g, or -1 when g is not an element.
  int index_of(const E& g) const {
    auto it = lookup_.find(g);
    return it == lookup_.end() ? -1 : it->second;
  }

  int mul(int a, int b) const {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(a) * elems_.size() +
                    static_cast<std::size_t>(b)];
    return index_of(elems_[static_cast<std::size_t>(a)] *
                    elems_[static_cast<std::size_t>(b)]);
  }

  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

  int conjugate(int g, int x) const {  // g x g^{-1}
    return mul(mul(g, x), inv(g));
  }

  /// Index of elems_[i] * generators()[gi]; the Cayley-graph edge map.
  int trans(int i, int gi) const {
    return trans_[static_cast<std::size_t>(i) * gens_.size() +
                  static_cast<std::size_t>(gi)];
  }

  uint64_t element_order(int i) const {
    uint64_t n = 1;
    int x = i;
    while (x != 0) {
      x = mul(x, i);
      ++n;
    }
    return n;
  }

  // --- conjugacy classes (computed lazily, cached) ---

  const std::vector<std::vector<int>>& classes() const {
    ensure_classes();
    return classes_;
  }
  int class_count() const { return static_cast<int>(classes().size()); }
  int class_of(int i) const {
    ensure_classes();
    return class_of_[static_cast<std::size_t>(i)];
  }
  /// Smallest element index in each class; class 0 is the identity's.
  std::vector<int> class_reps() const {
    ensure_classes();
    std::vector<int> reps;
    reps.reserve(classes_.size());
    for (const auto& c : classes_) reps.push_back(c.front());
    return reps;
  }

  // --- subgroups ---

  Subgroup<E> subgroup_by_indices(const std::vector<int>& gen_idx) const {
    std::vector<int> elems{0};
    std::set<int> seen{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int e : frontier)
        for (int g : gen_idx) {
          int f = mul(e, g);
          if (seen.insert(f).second) {
            elems.push_back(f);
            next.push_back(f);
          }
        }
      frontier = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup<E>{this->shared_from_this(), std::move(elems)};
  }

  Subgroup<E> subgroup(const std::vector<E>& gens_in) const {
    std::vector<int> idx;
    for (const auto& g : gens_in) {
      int i = index_of(g);
      if (i < 0) throw error(errc::not_a_subgroup, "generator is not a group element");
      idx.push_back(i);
    }
    return subgroup_by_indices(idx);
  }

  Subgroup<E> trivial_subgroup() const {
    return Subgroup<E>{this->shared_from_this(), {0}};
  }
  Subgroup<E> full_subgroup() const {
    std::vector<int> all(order());
    for (std::size_t i = 0; i < order(); ++i) all[i] = static_cast<int>(i);
    return Subgroup<E>{this->shared_from_this(), std::move(all)};
  }

 private:
  Group(const E& identity, std::vector<E> gens, std::size_t bound)
      : gens_(std::move(gens)) {
    elems_.push_back(identity);
    lookup_.emplace(identity, 0);
    std::size_t head = 0;
    while (head < elems_.size()) {
      const E cur = elems_[head];
      for (const auto& g : gens_) {
        E nxt = cur * g;
        auto [it, fresh] = lookup_.emplace(nxt, static_cast<int>(elems_.size()));
        if (fresh) {
          if (elems_.size() >= bound)
            throw error(errc::order_bound_exceeded, "group order exceeds the bound");
          elems_.push_back(std::move(nxt));
        }
        trans_.push_back(it->second);
      }
      ++head;
    }
    inv_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      int j = index_of(elems_[i].inverse());
      inv_[i] = j;
    }
    if (elems_.size() <= kMultTableMax) {
      table_.resize(elems_.size() * elems_.size());
      for (std::size_t a = 0; a < elems_.size(); ++a)
        for (std::size_t b = 0; b < elems_.size(); ++b)
          table_[a * elems_.size() + b] = index_of(elems_[a] * elems_[b]);
    }
  }

  void ensure_classes() const {
    std::call_once(classes_once_, [this] {
      std::vector<int> cls(elems_.size(), -1);
      std::vector<std::vector<int>> out;
      for (std::size_t s = 0; s < elems_.size(); ++s) {
        if (cls[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> orbit{static_cast<int>(s)};
        cls[s] = id;
        std::vector<int> frontier{static_cast<int>(s)};
        while (!frontier.empty()) {
          std::vector<int> next;
          for (int x : frontier)
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
              int g = gen_idx(gi);
              int y = conjugate(g, x);
              if (cls[static_cast<std::size_t>(y)] == -1) {
                cls[static_cast<std::size_t>(y)] = id;
                orbit.push_back(y);
                next.push_back(y);
              }
            }
          frontier = std::move(next);
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
      }
      classes_ = std::move(out);
      class_of_ = std::move(cls);
    });
  }

  int gen_idx(std::size_t gi) const { return trans_[gi]; }  // trans(0, gi) = id*g

  std::vector<E> gens_;
  std::vector<E> elems_;
  std::unordered_map<E, int> lookup_;
  std::vector<int> trans_;
  std::vector<int> inv_;
  std::vector<int> table_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<int>> classes_;
  mutable std::vector<int> class_of_;
};

// --- coset machinery -------------------------------------------------------

/// Left-multiplication action of a group on the left cosets of a subgroup.
/// Coset 0 is H itself; coset order is discovery order from H by generators.
template <class E>
struct CosetAction {
  GroupPtr<E> parent;
  std::vector<std::vector<int>> cosets;  // sorted element-index sets
  std::vector<int> reps;                 // one representative per coset; reps[0] = 0
  std::vector<Perm> images;              // one permutation per parent element
};

template <class E>
CosetAction<E> coset_action(const Subgroup<E>& H) {
  const auto& G = *H.parent;
  std::map<std::vector<int>, int> id_of;
  CosetAction<E> act;
  act.parent = H.parent;
  auto coset_of = [&](int g) {
    std::vector<int> c;
    c.reserve(H.elems.size());
    for (int h : H.elems) c.push_back(G.mul(g, h));
    std::sort(c.begin(), c.end());
    return c;
  };
  act.cosets.push_back(H.elems);
  act.reps.push_back(0);
  id_of.emplace(H.elems, 0);
  for (std::size_t head = 0; head < act.cosets.size(); ++head) {
    for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
      int g = G.trans(0, static_cast<int>(gi));
      int moved = G.mul(g, act.reps[head]);
      std::vector<int> c = coset_of(moved);
      if (id_of.emplace(c, static_cast<int>(act.cosets.size())).second) {
        act.cosets.push_back(std::move(c));
        act.reps.push_back(moved);
      }
    }
  }
  const int n = static_cast<int>(act.cosets.size());
  // image of every element, built along the Cayley tree: phi(e*g) = phi(e)*phi(g)
  std::vector<Perm> img(G.order());
  auto image_of = [&](int g) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      auto it = id_of.find(coset_of(G.mul(g, act.reps[static_cast<std::size_t>(c)])));
      v[static_cast<std::size_t>(c)] = it->second;
    }
    return Perm(std::move(v));
  };
  for (std::size_t i = 0; i < G.order(); ++i) img[i] = image_of(static_cast<int>(i));
  act.images = std::move(img);
  return act;
}

// --- subgroup conjugacy ----------------------------------------------------

/// Sorted element-set of g H g^{-1}.
template <class E>
std::vector<int> conjugate_set(const Group<E>& G, const std::vector<int>& elems, int g) {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int x : elems) out.push_back(G.conjugate(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Witness g with g A g^{-1} = B, or -1.
template <class E>
int conjugating_element(const Subgroup<E>& A, const Subgroup<E>& B) {
  if (A.parent != B.parent)
    throw error(errc::group_mismatch, "subgroups of different parents");
  if (A.elems.size() != B.elems.size()) return -1;
  const auto& G = *A.parent;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (conjugate_set(G, A.elems, static_cast<int>(g)) == B.elems)
      return static_cast<int>(g);
  return -1;
}

template <class E>
bool are_conjugate(const Subgroup<E>& A, const Subgroup<E>& B) {
  return conjugating_element(A, B) >= 0;
}

/// Lexicographically smallest conjugate element-set; canonical form of the
/// conjugacy class of a subgroup.
template <class E>
std::vector<int> canonical_conjugate(const Subgroup<E>& S) {
  const auto& G = *S.parent;
  std::vector<int> best = conjugate_set(G, S.elems, 0);
  for (std::size_t g = 1; g < G.order(); ++g) {
    std::vector<int> c = conjugate_set(G, S.elems, static_cast<int>(g));
    if (c < best) best = std::move(c);
  }
  return best;
}

// --- subgroup enumeration --------------------------------------------------

/// Every subgroup, by upward closure of the lattice: repeatedly extend each
/// known subgroup by one additional element.  Complete; cost grows with the
/// subgroup count, so intended for orders in the hundreds.
template <class E>
std::vector<Subgroup<E>> all_subgroups(const GroupPtr<E>& G) {
  std::map<std::vector<int>, std::vector<int>> gens_of;  // element set -> a genset
  std::vector<std::vector<int>> queue;
  const std::vector<int> triv{0};
  gens_of.emplace(triv, std::vector<int>{});
  queue.push_back(triv);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> cur = queue[head];
    std::vector<int> gens = gens_of.at(cur);
    for (std::size_t e = 1; e < G->order(); ++e) {
      if (std::binary_search(cur.begin(), cur.end(), static_cast<int>(e))) continue;
      std::vector<int> g2 = gens;
      g2.push_back(static_cast<int>(e));
      Subgroup<E> S = G->subgroup_by_indices(g2);
      if (gens_of.emplace(S.elems, g2).second) queue.push_back(S.elems);
    }
  }
  std::vector<Subgroup<E>> out;
  out.reserve(queue.size());
  for (auto& elems : queue) out.push_back(Subgroup<E>{G, std::move(elems)});
  std::sort(out.begin(), out.end(), [](const Subgroup<E>& a, const Subgroup<E>& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

/// One representative per conjugacy class, smallest canonical form first
/// within each order.
template <class E>
std::vector<Subgroup<E>> subgroup_classes(const GroupPtr<E>& G,
                                          const std::vector<Subgroup<E>>& subs) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup<E>> out;
  for (const auto& s : subs) {
    std::vector<int> canon = canonical_conjugate(s);
    if (seen.insert(canon).second) out.push_back(Subgroup<E>{G, std::move(canon)});
  }
  std::sort(out.begin(), out.end(), [](const Subgroup<E>& a, const Subgroup<E>& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

/// Conjugacy-class representatives of subgroups of exact order k, found by
/// scanning generating sets of up to max_gens elements whose first member is
/// a class representative.  Complete for subgroups that admit a generating
/// set of max_gens elements: conjugating such a subgroup so that its first
/// generator lands on that generator's class representative produces a
/// conjugate the scan visits.
template <class E>
std::vector<Subgroup<E>> subgroup_classes_of_order(const GroupPtr<E>& G, std::size_t k,
                                                   int max_gens = 3) {
  if (G->order() % k != 0) return {};
  std::set<std::vector<int>> seen;       // canonical forms
  std::vector<Subgroup<E>> out;
  std::set<std::vector<int>> visited;    // raw element sets already processed
  auto consider = [&](const Subgroup<E>& S) {
    if (S.elems.size() != k) return;
    std::vector<int> canon = canonical_conjugate(S);
    if (seen.insert(canon).second) out.push_back(Subgroup<E>{G, std::move(canon)});
  };
  struct Node {
    std::vector<int> gens;
    std::vector<int> elems;
  };
  std::vector<Node> frontier;
  for (int r : G->class_reps()) {
    if (r == 0 && k > 1) continue;
    if (k % G->element_order(r) != 0) continue;
    Subgroup<E> S = G->subgroup_by_indices({r});
    if (k % S.elems.size() != 0) continue;
    consider(S);
    if (visited.insert(S.elems).second && S.elems.size() < k)
      frontier.push_back(Node{{r}, S.elems});
  }
  for (int depth = 2; depth <= max_gens && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (std::size_t e = 1; e < G->order(); ++e) {
        if (std::binary_search(node.elems.begin(), node.elems.end(),
                               static_cast<int>(e)))
          continue;
        if (k % G->element_order(static_cast<int>(e)) != 0) continue;
        std::vector<int> g2 = node.gens;
        g2.push_back(static_cast<int>(e));
        Subgroup<E> S = G->subgroup_by_indices(g2);
        if (S.elems.size() > k || k % S.elems.size() != 0) continue;
        consider(S);
        if (S.elems.size() < k && visited.insert(S.elems).second)
          next.push_back(Node{std::move(g2), S.elems});
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup<E>& a, const Subgroup<E>& b) { return a.elems < b.elems; });
  return out;
}

/// Conjugacy-class representatives of subgroups of index n, from the complete
/// lattice.
template <class E>
std::vector<Subgroup<E>> low_index_subgroups(const GroupPtr<E>& G, std::size_t n) {
  if (G->order() % n != 0) return {};
  std::vector<Subgroup<E>> hits;
  for (const auto& s : all_subgroups(G))
    if (s.index() == n) hits.push_back(s);
  return subgroup_classes(G, hits);
}

/// The derived subgroup [G,G]: closure of all element commutators (the
/// commutator set is conjugation-stable, so no further normal closure is
/// needed).
template <class E>
Subgroup<E> commutator_subgroup(const GroupPtr<E>& G) {
  std::set<int> comms;
  for (std::size_t a = 0; a < G->order(); ++a)
    for (std::size_t b = 0; b < G->order(); ++b) {
      int ia = static_cast<int>(a), ib = static_cast<int>(b);
      comms.insert(G->mul(G->mul(ia, ib), G->mul(G->inv(ia), G->inv(ib))));
    }
  return G->subgroup_by_indices(std::vector<int>(comms.begin(), comms.end()));
}

}  // namespace glab
