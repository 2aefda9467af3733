#include "glab/irreducibles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "glab/error.hpp"

namespace glab {

namespace {

using CF = ClassFunction<Perm>;

bool values_less(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cyclo_less(a[i], b[i])) return true;
    if (cyclo_less(b[i], a[i])) return false;
  }
  return false;
}

void sort_canonical(std::vector<CF>& chars) {
  std::sort(chars.begin(), chars.end(), [](const CF& x, const CF& y) {
    Rat dx = x.degree().to_rational(), dy = y.degree().to_rational();
    if (dx != dy) return dx < dy;
    return values_less(x.values(), y.values());
  });
}

int64_t degree_int(const CF& f) {
  return rat_to_int(f.degree().to_rational()).convert_to<int64_t>();
}

void validate_complete(const GroupPtr<Perm>& G, std::vector<CF>& chars) {
  if (chars.size() != G->classes().size())
    throw error(errc::incomplete_decomposition,
                "irreducible count disagrees with the class count");
  int64_t sum = 0;
  for (const CF& f : chars) sum += degree_int(f) * degree_int(f);
  if (sum != static_cast<int64_t>(G->order()))
    throw error(errc::incomplete_decomposition,
                "sum of squared degrees disagrees with the group order");
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i; j < chars.size(); ++j)
      if (inner_product_int(chars[i], chars[j]) != (i == j ? 1 : 0))
        throw error(errc::incomplete_decomposition,
                    "characters are not orthonormal");
  sort_canonical(chars);
}

// --- symmetric groups: permutation characters of Young subgroups ------------

std::vector<std::vector<int>> partitions_desc(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographically descending; dominance order refines this, so each
  // partition's character appears after everything it needs subtracted
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<CF> symmetric_irreducibles(const GroupPtr<Perm>& G, int n) {
  std::vector<CF> knowns;
  for (const auto& lambda : partitions_desc(n)) {
    std::vector<Perm> gens;
    int start = 0;
    for (int part : lambda) {
      for (int j = 0; j + 1 < part; ++j) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) img[static_cast<std::size_t>(t)] = t;
        std::swap(img[static_cast<std::size_t>(start + j)],
                  img[static_cast<std::size_t>(start + j + 1)]);
        gens.emplace_back(std::move(img));
      }
      start += part;
    }
    Realized<Perm> young = realize(G->subgroup(gens));
    CF cand = induce(young, CF::trivial(young.grp));
    for (const CF& k : knowns) {
      int64_t m = inner_product_int(cand, k);
      if (m != 0) cand = cand - k.scaled(Rat(m));
    }
    if (inner_product_int(cand, cand) != 1)
      throw error(errc::incomplete_decomposition,
                  "Young permutation character did not reduce to an irreducible");
    knowns.push_back(std::move(cand));
  }
  return knowns;
}

// --- general groups: decompose induced characters ----------------------------

struct Engine {
  GroupPtr<Perm> G;
  std::vector<CF> knowns;
  std::vector<CF> pool;
  std::set<std::vector<std::string>> seen;  // dedupe by printed values

  bool remember(const CF& f) {
    std::vector<std::string> key;
    key.reserve(f.values().size());
    for (const auto& v : f.values()) key.push_back(v.str());
    return seen.insert(std::move(key)).second;
  }

  int64_t known_degree2() const {
    int64_t s = 0;
    for (const CF& k : knowns) s += degree_int(k) * degree_int(k);
    return s;
  }

  CF reduce(CF f) const {
    for (const CF& k : knowns) {
      int64_t m = inner_product_int(f, k);
      if (m != 0) f = f - k.scaled(Rat(m));
    }
    return f;
  }

  // Returns true when f (reduced, sign-normalized) became a new irreducible.
  bool digest(CF f) {
    f = reduce(std::move(f));
    if (f.is_zero()) return false;
    Rat d = f.degree().to_rational();
    if (d < 0) {
      f = -f;
      d = -d;
    }
    if (d == 0) return false;
    int64_t n2 = inner_product_int(f, f);
    if (n2 == 1) {
      knowns.push_back(std::move(f));
      return true;
    }
    if (n2 == 4 && rat_to_int(d) % 2 == 0) {
      CF half = f.scaled(Rat(1, 2));
      bool integral = std::all_of(half.values().begin(), half.values().end(),
                                  [](const CycloNum& v) { return v.is_integral(); });
      if (integral && inner_product_int(half, half) == 1) {
        knowns.push_back(std::move(half));
        return true;
      }
    }
    if (remember(f)) pool.push_back(std::move(f));
    return false;
  }
};

std::vector<CF> engine_irreducibles(const GroupPtr<Perm>& G) {
  Engine eng;
  eng.G = G;
  eng.knowns = abelian_characters(G);  // every degree-1 character

  std::vector<CF> raw;
  for (int rep : G->class_reps()) {
    Realized<Perm> C = realize(G->subgroup_by_indices({rep}));
    for (const CF& chi : abelian_characters(C.grp)) raw.push_back(induce(C, chi));
  }
  const std::size_t ord = G->order();
  for (std::size_t d = 2; d <= 8; ++d) {
    if (ord % d != 0) continue;
    for (const auto& S : subgroup_classes_of_order(G, ord / d)) {
      Realized<Perm> R = realize(S);
      raw.push_back(induce(R, CF::trivial(R.grp)));
    }
  }

  const int64_t target = static_cast<int64_t>(ord);
  for (CF& f : raw) {
    if (eng.known_degree2() >= target) break;
    eng.digest(std::move(f));
  }
  bool progress = true;
  while (eng.known_degree2() < target && progress) {
    progress = false;
    std::vector<CF> cur = std::move(eng.pool);
    eng.pool.clear();
    for (CF& f : cur)
      if (eng.digest(std::move(f))) progress = true;
    cur = eng.pool;  // survivors after reduction
    for (std::size_t i = 0; i < cur.size() && eng.known_degree2() < target; ++i)
      for (std::size_t j = i + 1; j < cur.size() && eng.known_degree2() < target; ++j)
        if (eng.digest(cur[i] - cur[j])) progress = true;
    for (std::size_t i = 0; i < eng.knowns.size() && eng.known_degree2() < target; ++i)
      if (eng.digest(eng.knowns[i].dual())) progress = true;
  }
  if (eng.known_degree2() != target)
    throw error(errc::incomplete_decomposition,
                "could not complete the irreducible list from induced characters");
  return eng.knowns;
}

bool is_abelian(const GroupPtr<Perm>& G) {
  return G->classes().size() == G->order();
}

bool is_natural_symmetric(const GroupPtr<Perm>& G) {
  uint64_t f = 1;
  const int n = G->element(0).degree();
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return G->order() == f && n >= 2;
}

}  // namespace

const std::vector<ClassFunction<Perm>>& irreducible_list(const GroupPtr<Perm>& G) {
  static std::mutex mu;
  static std::map<GroupPtr<Perm>, std::vector<CF>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(G);
  if (it != cache.end()) return it->second;

  std::vector<CF> chars;
  if (is_abelian(G))
    chars = abelian_characters(G);
  else if (is_natural_symmetric(G))
    chars = symmetric_irreducibles(G, G->element(0).degree());
  else
    chars = engine_irreducibles(G);
  validate_complete(G, chars);
  return cache.emplace(G, std::move(chars)).first->second;
}

}  // namespace glab
