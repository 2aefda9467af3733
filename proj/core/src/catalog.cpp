#include "glab/catalog.hpp"

#include <numeric>

#include "glab/error.hpp"
#include "glab/numutil.hpp"

namespace glab {

namespace {

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

GroupPtr<Perm> closure_checked(int degree, std::vector<Perm> gens, uint64_t expect) {
  auto G = Group<Perm>::closure(Perm::identity(degree), std::move(gens));
  if (G->order() != expect)
    throw error(errc::unsupported, "catalog group has unexpected order");
  return G;
}

Perm cycle_shift(int degree, int start, int len) {  // (start start+1 ... start+len-1)
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  for (int j = 0; j < len; ++j)
    img[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
  return Perm(std::move(img));
}

}  // namespace

GroupPtr<Perm> make_cyclic(int n) {
  if (n < 1) throw error(errc::unsupported, "cyclic group of nonpositive order");
  if (n == 1) return closure_checked(1, {}, 1);
  return closure_checked(n, {cycle_shift(n, 0, n)}, static_cast<uint64_t>(n));
}

GroupPtr<Perm> make_abelian(const std::vector<int>& orders) {
  std::vector<int> parts;
  for (int n : orders) {
    if (n < 1) throw error(errc::unsupported, "cyclic factor of nonpositive order");
    if (n > 1) parts.push_back(n);
  }
  if (parts.empty()) return make_cyclic(1);
  int degree = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<Perm> gens;
  uint64_t expect = 1;
  int start = 0;
  for (int n : parts) {
    gens.push_back(cycle_shift(degree, start, n));
    start += n;
    expect *= static_cast<uint64_t>(n);
  }
  return closure_checked(degree, std::move(gens), expect);
}

GroupPtr<Perm> make_klein4() { return make_abelian({2, 2}); }

GroupPtr<Perm> make_symmetric(int n) {
  if (n < 1) throw error(errc::unsupported, "symmetric group on no points");
  if (n == 1) return make_cyclic(1);
  std::vector<Perm> gens{Perm::parse("(0 1)", n)};
  if (n > 2) gens.push_back(cycle_shift(n, 0, n));
  return closure_checked(n, std::move(gens), factorial(n));
}

GroupPtr<Perm> make_alternating(int n) {
  if (n < 3) throw error(errc::unsupported, "alternating group needs n >= 3");
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    img[0] = 1;
    img[1] = k;
    img[static_cast<std::size_t>(k)] = 0;
    gens.emplace_back(std::move(img));
  }
  return closure_checked(n, std::move(gens), factorial(n) / 2);
}

GroupPtr<Perm> make_dihedral(int n) {
  if (n < 3) throw error(errc::unsupported, "dihedral group needs n >= 3");
  std::vector<int> refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = (n - i) % n;
  return closure_checked(n, {cycle_shift(n, 0, n), Perm(std::move(refl))},
                         2 * static_cast<uint64_t>(n));
}

QuaternionData make_quaternion8() {
  // Units encoded 0..7 as (axis e,i,j,k) * 2 + (1 if negated); multiplication
  // from the quaternion relations, then the regular action by left product.
  auto mul = [](int a, int b) {
    static constexpr int axis_tab[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign_tab[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int ax = a / 2, bx = b / 2;
    int sign = (a & 1) ^ (b & 1) ^ sign_tab[ax][bx];
    return axis_tab[ax][bx] * 2 + sign;
  };
  auto left = [&](int g) {
    std::vector<int> img(8);
    for (int x = 0; x < 8; ++x) img[static_cast<std::size_t>(x)] = mul(g, x);
    return Perm(std::move(img));
  };
  QuaternionData q;
  q.i = left(2);
  q.j = left(4);
  q.group = closure_checked(8, {q.i, q.j}, 8);
  return q;
}

GroupPtr<Perm> make_psl2(int p) {
  if (p < 5 || !is_prime(static_cast<uint64_t>(p)))
    throw error(errc::bad_prime, "projective group wants an odd prime >= 5");
  const int inf = p;
  std::vector<int> t(static_cast<std::size_t>(p + 1)), s(static_cast<std::size_t>(p + 1));
  for (int x = 0; x < p; ++x) t[static_cast<std::size_t>(x)] = (x + 1) % p;
  t[static_cast<std::size_t>(inf)] = inf;
  s[0] = inf;
  s[static_cast<std::size_t>(inf)] = 0;
  for (int x = 1; x < p; ++x)
    s[static_cast<std::size_t>(x)] =
        (p - static_cast<int>(mod_inv(x, p))) % p;
  uint64_t order = static_cast<uint64_t>(p) * (static_cast<uint64_t>(p) * p - 1) / 2;
  return closure_checked(p + 1, {Perm(std::move(t)), Perm(std::move(s))}, order);
}

}  // namespace glab
