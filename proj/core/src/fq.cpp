#include "glab/fq.hpp"

#include <algorithm>
#include <sstream>

#include "glab/fqpoly.hpp"
#include "glab/numutil.hpp"

namespace glab {
namespace {

void check_same(const FqElem& a, const FqElem& b) {
  if (!same_field(a, b))
    throw error(errc::mixed_fields, "elements from different finite fields");
}

std::string poly_int_str(const std::vector<int64_t>& c, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

bool FqElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int64_t v) { return v == 0; });
}

bool FqElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](int64_t v) { return v == 0; });
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  const int64_t p = a.f_->p();
  std::vector<int64_t> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b.c_[i]) % p;
  return FqElem(a.f_, std::move(c));
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  const int64_t p = a.f_->p();
  std::vector<int64_t> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] - b.c_[i] + p) % p;
  return FqElem(a.f_, std::move(c));
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  const int64_t p = a.f_->p();
  const auto& mod = a.f_->modulus();
  const std::size_t m = a.c_.size();
  std::vector<int64_t> prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j)
      prod[i + j] = (prod[i + j] + a.c_[i] * b.c_[j]) % p;
  }
  // reduce by the monic modulus of degree m
  for (std::size_t k = prod.size(); k-- > m;) {
    const int64_t t = prod[k];
    if (t == 0) continue;
    prod[k] = 0;
    for (std::size_t j = 0; j < m; ++j)
      prod[k - m + j] = ((prod[k - m + j] - t * mod[j]) % p + p) % p;
  }
  prod.resize(m);
  return FqElem(a.f_, std::move(prod));
}

FqElem FqElem::operator-() const {
  const int64_t p = f_->p();
  std::vector<int64_t> c(c_);
  for (auto& v : c) v = (p - v) % p;
  return FqElem(f_, std::move(c));
}

FqElem FqElem::pow(uint64_t e) const {
  FqElem r = f_->one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FqElem FqElem::inv() const {
  if (is_zero()) throw error(errc::division_by_zero, "inverse of 0");
  return pow(f_->q() - 2);
}

bool operator==(const FqElem& a, const FqElem& b) {
  return same_field(a, b) && a.c_ == b.c_;
}

bool operator<(const FqElem& a, const FqElem& b) { return a.index() < b.index(); }

uint64_t FqElem::index() const {
  uint64_t v = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    v = v * static_cast<uint64_t>(f_->p()) + static_cast<uint64_t>(c_[i]);
  return v;
}

std::string FqElem::str() const { return poly_int_str(c_, "w"); }

FqField::FqField(int64_t p, int m, std::vector<int64_t> mod)
    : p_(p), m_(m), q_(checked_pow(static_cast<uint64_t>(p), static_cast<unsigned>(m))),
      mod_(std::move(mod)) {}

namespace {

/// Irreducibility of a monic integer-coefficient polynomial over F_p, checked
/// through the degree-1 field (whose own construction never recurses here).
bool int_poly_irreducible(int64_t p, const std::vector<int64_t>& c) {
  auto Fp = FqField::make(p);
  std::vector<FqElem> lifted;
  lifted.reserve(c.size());
  for (int64_t v : c) lifted.push_back(Fp->from_int(v));
  return is_irreducible(Poly<FqElem>(std::move(lifted)));
}

}  // namespace

FqFieldPtr FqField::make(int64_t p, int m) {
  if (m == 1) return make(p, std::vector<int64_t>{0, 1});
  if (p < 2 || !is_prime(static_cast<uint64_t>(p)))
    throw error(errc::bad_prime, "characteristic must be prime");
  if (m < 1) throw error(errc::bad_prime, "extension degree must be >= 1");
  const uint64_t bound = checked_pow(static_cast<uint64_t>(p), static_cast<unsigned>(m));
  for (uint64_t k = 0; k < bound; ++k) {
    std::vector<int64_t> c(static_cast<std::size_t>(m) + 1, 0);
    uint64_t t = k;
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int64_t>(t % static_cast<uint64_t>(p));
      t /= static_cast<uint64_t>(p);
    }
    c[static_cast<std::size_t>(m)] = 1;
    if (int_poly_irreducible(p, c)) return FqFieldPtr(new FqField(p, m, std::move(c)));
  }
  throw error(errc::unsupported, "no irreducible modulus found");  // unreachable
}

FqFieldPtr FqField::make(int64_t p, std::vector<int64_t> modulus) {
  if (p < 2 || !is_prime(static_cast<uint64_t>(p)))
    throw error(errc::bad_prime, "characteristic must be prime");
  if (modulus.size() < 2)
    throw error(errc::bad_prime, "modulus must have degree >= 1");
  for (auto& v : modulus) v = ((v % p) + p) % p;
  if (modulus.back() != 1)
    throw error(errc::bad_prime, "modulus must be monic");
  const int m = static_cast<int>(modulus.size()) - 1;
  if (m > 1 && !int_poly_irreducible(p, modulus))
    throw error(errc::not_irreducible, "modulus is reducible");
  return FqFieldPtr(new FqField(p, m, std::move(modulus)));
}

FqElem FqField::zero() const {
  return FqElem(shared_from_this(), std::vector<int64_t>(static_cast<std::size_t>(m_), 0));
}

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::w() const {
  if (m_ == 1)
    throw error(errc::unsupported, "prime field has no extension generator w");
  std::vector<int64_t> c(static_cast<std::size_t>(m_), 0);
  c[1] = 1;
  return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::from_int(int64_t v) const {
  std::vector<int64_t> c(static_cast<std::size_t>(m_), 0);
  c[0] = ((v % p_) + p_) % p_;
  return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::from_coeffs(std::vector<int64_t> c) const {
  if (c.size() > static_cast<std::size_t>(m_))
    throw error(errc::degree_mismatch, "coefficient vector longer than field degree");
  c.resize(static_cast<std::size_t>(m_), 0);
  for (auto& v : c) v = ((v % p_) + p_) % p_;
  return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::from_index(uint64_t idx) const {
  if (idx >= q_) throw error(errc::enumeration_bound_exceeded, "element index out of range");
  std::vector<int64_t> c(static_cast<std::size_t>(m_), 0);
  for (int i = 0; i < m_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int64_t>(idx % static_cast<uint64_t>(p_));
    idx /= static_cast<uint64_t>(p_);
  }
  return FqElem(shared_from_this(), std::move(c));
}

FqElem FqField::generator() const {
  std::call_once(gen_once_, [this] {
    const auto primes = factorize(q_ - 1);
    for (uint64_t idx = 1; idx < q_; ++idx) {
      FqElem a = from_index(idx);
      bool ok = true;
      for (auto [r, e] : primes)
        if (a.pow((q_ - 1) / r).is_one()) {
          ok = false;
          break;
        }
      if (ok) {
        gen_ = a;
        return;
      }
    }
    throw error(errc::unsupported, "no multiplicative generator found");  // unreachable
  });
  return *gen_;
}

std::vector<FqElem> FqField::elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (uint64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

std::string FqField::str() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (m_ > 1) os << " = F_" << p_ << "[w]/(" << poly_int_str(mod_, "w") << ")";
  return os.str();
}

}  // namespace glab
