#include "glab/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "glab/error.hpp"
#include "glab/fqpoly.hpp"
#include "glab/numutil.hpp"

namespace glab {
namespace {

Poly<Rat> x_pow_minus_one(uint64_t k) {
  std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(0));
  c[0] = Rat(-1);
  c[static_cast<std::size_t>(k)] = Rat(1);
  return Poly<Rat>(std::move(c));
}

Poly<Rat> compute_cyclotomic(uint64_t n) {
  // prod over d | n of (x^{n/d} - 1)^{mobius(d)}
  Poly<Rat> num = Poly<Rat>::constant(Rat(1));
  std::vector<uint64_t> dens;
  for (uint64_t d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 1) num = num * x_pow_minus_one(n / d);
    else if (mu == -1) dens.push_back(n / d);
  }
  for (uint64_t k : dens) num = poly_exact_div(num, x_pow_minus_one(k));
  return num;
}

}  // namespace

const Poly<Rat>& cyclotomic_poly(uint64_t n) {
  static std::mutex mu;
  static std::map<uint64_t, Poly<Rat>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

CycloNum CycloNum::rational(Rat r) {
  return CycloNum(1, Poly<Rat>::constant(std::move(r)));
}

CycloNum CycloNum::root_of_unity(uint64_t n, int64_t k) {
  if (n == 0) throw error(errc::unsupported, "root of unity of order 0");
  const uint64_t kk =
      static_cast<uint64_t>(((k % static_cast<int64_t>(n)) + static_cast<int64_t>(n)) %
                            static_cast<int64_t>(n));
  Poly<Rat> rep = poly_mod(Poly<Rat>::monomial(Rat(1), static_cast<int>(kk)),
                           cyclotomic_poly(n));
  return CycloNum(n, std::move(rep));
}

Rat CycloNum::to_rational() const {
  if (!is_rational()) throw error(errc::unsupported, "cyclotomic number is irrational");
  return rep_.is_zero() ? Rat(0) : rep_[0];
}

CycloNum CycloNum::promoted(uint64_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw error(errc::unsupported, "conductor does not divide target");
  const uint64_t step = m / n_;
  Poly<Rat> out;
  for (int i = 0; i <= rep_.degree(); ++i) {
    if (rep_[static_cast<std::size_t>(i)] == 0) continue;
    out += Poly<Rat>::monomial(rep_[static_cast<std::size_t>(i)],
                               static_cast<int>(step) * i);
  }
  return CycloNum(m, poly_mod(out, cyclotomic_poly(m)));
}

CycloNum CycloNum::conj() const {
  Poly<Rat> out;
  for (int i = 0; i <= rep_.degree(); ++i) {
    if (rep_[static_cast<std::size_t>(i)] == 0) continue;
    const uint64_t e = (n_ - static_cast<uint64_t>(i)) % n_;
    out += Poly<Rat>::monomial(rep_[static_cast<std::size_t>(i)], static_cast<int>(e));
  }
  return CycloNum(n_, poly_mod(out, cyclotomic_poly(n_)));
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  const uint64_t m = std::lcm(a.n_, b.n_);
  CycloNum x = a.promoted(m), y = b.promoted(m);
  return CycloNum(m, x.rep_ + y.rep_);
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  const uint64_t m = std::lcm(a.n_, b.n_);
  CycloNum x = a.promoted(m), y = b.promoted(m);
  return CycloNum(m, poly_mod(x.rep_ * y.rep_, cyclotomic_poly(m)));
}

CycloNum CycloNum::operator-() const { return CycloNum(n_, -rep_); }

CycloNum CycloNum::scaled(const Rat& k) const { return CycloNum(n_, rep_.scaled(k)); }

CycloNum CycloNum::divided(const Rat& k) const {
  if (k == 0) throw error(errc::division_by_zero, "division by 0");
  return scaled(1 / k);
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  const uint64_t m = std::lcm(a.n_, b.n_);
  return a.promoted(m).rep_ == b.promoted(m).rep_;
}

std::string CycloNum::str() const {
  if (rep_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= rep_.degree(); ++i) {
    const Rat& c = rep_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool CycloNum::is_integral() const {
  for (int i = 0; i <= rep_.degree(); ++i)
    if (!rat_is_integer(rep_[static_cast<std::size_t>(i)])) return false;
  return true;
}

bool cyclo_less(const CycloNum& a, const CycloNum& b) {
  const uint64_t m = std::lcm(a.conductor(), b.conductor());
  const Poly<Rat> pa = a.promoted(m).rep();
  const Poly<Rat> pb = b.promoted(m).rep();
  if (pa.degree() != pb.degree()) return pa.degree() < pb.degree();
  for (int i = pa.degree(); i >= 0; --i) {
    const Rat &x = pa[static_cast<std::size_t>(i)], &y = pb[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace glab
