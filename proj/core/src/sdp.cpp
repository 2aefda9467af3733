#include "glab/sdp.hpp"

#include "glab/error.hpp"
#include "glab/numutil.hpp"

namespace glab {

namespace {

void check_compatible(const SdpElement& a, const SdpElement& b) {
  if (a.l != b.l || a.c.size() != b.c.size() || a.g.degree() != b.g.degree())
    throw error(errc::group_mismatch, "semidirect elements from different products");
}

}  // namespace

SdpElement operator*(const SdpElement& a, const SdpElement& b) {
  check_compatible(a, b);
  SdpElement out;
  out.l = a.l;
  out.c.resize(a.c.size());
  // (c, g)(c', g') = (c + g.c', gg') where (g.v)_{act(i)} = v_i
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    std::size_t j = static_cast<std::size_t>(a.act(static_cast<int>(i)));
    out.c[j] = static_cast<int>((a.c[j] + b.c[i]) % a.l);
  }
  out.g = a.g * b.g;
  out.act = a.act * b.act;
  return out;
}

SdpElement SdpElement::inverse() const {
  SdpElement out;
  out.l = l;
  out.g = g.inverse();
  out.act = act.inverse();
  out.c.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::size_t j = static_cast<std::size_t>(act(static_cast<int>(i)));
    out.c[i] = static_cast<int>((l - c[j]) % l);
  }
  return out;
}

std::size_t SdpElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(l));
  for (int v : c) mix(static_cast<std::size_t>(v) + 1);
  mix(g.hash());
  return h;
}

std::string SdpElement::str() const {
  std::string out = "((";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += "); " + g.str() + ")";
  return out;
}

SemidirectData semidirect_product(const GroupPtr<Perm>& G, const Subgroup<Perm>& H,
                                  int64_t l, std::size_t bound) {
  if (H.parent != G)
    throw error(errc::group_mismatch, "subgroup belongs to a different group");
  if (l == 2 || l % 2 == 0)
    throw error(errc::even_or_equal_two, "the twisting prime must be odd");
  if (l < 2 || !is_prime(static_cast<uint64_t>(l)))
    throw error(errc::bad_prime, "the twisting parameter must be an odd prime");

  SemidirectData data;
  data.base = G;
  data.base_sub = H;
  data.l = l;
  data.act = coset_action(H);
  data.n = static_cast<int>(data.act.cosets.size());

  uint64_t kernel = checked_pow(static_cast<uint64_t>(l),
                                static_cast<unsigned>(data.n));
  uint64_t expect = kernel * G->order();
  if (expect / kernel != G->order() || expect > bound)
    throw error(errc::order_bound_exceeded, "semidirect product order " +
                                                std::to_string(expect) +
                                                " exceeds the bound");

  const int deg = G->element(0).degree();
  auto lift = [&](int gidx, std::vector<int> coords) {
    SdpElement e;
    e.l = l;
    e.c = std::move(coords);
    e.g = G->element(gidx);
    e.act = data.act.images[static_cast<std::size_t>(gidx)];
    return e;
  };
  const std::vector<int> zero(static_cast<std::size_t>(data.n), 0);

  SdpElement id;
  id.l = l;
  id.c = zero;
  id.g = Perm::identity(deg);
  id.act = Perm::identity(data.n);

  std::vector<SdpElement> gens;
  std::vector<int> e0 = zero;
  e0[0] = 1;
  gens.push_back(lift(0, e0));
  for (const Perm& g : G->generators()) gens.push_back(lift(G->index_of(g), zero));

  data.big = Group<SdpElement>::closure(id, std::move(gens), bound);
  if (data.big->order() != expect)
    throw error(errc::unsupported, "semidirect closure has wrong order");

  std::vector<SdpElement> hgens;
  for (int i = 0; i < data.n; ++i) {
    std::vector<int> ei = zero;
    ei[static_cast<std::size_t>(i)] = 1;
    hgens.push_back(lift(0, ei));
  }
  for (int h : H.elems) hgens.push_back(lift(h, zero));
  data.sub = data.big->subgroup(hgens);
  if (data.sub.order() != kernel * H.elems.size())
    throw error(errc::unsupported, "semidirect subgroup has wrong order");

  data.embed.resize(G->order());
  for (std::size_t i = 0; i < G->order(); ++i)
    data.embed[i] = data.big->index_of(lift(static_cast<int>(i), zero));
  return data;
}

}  // namespace glab
