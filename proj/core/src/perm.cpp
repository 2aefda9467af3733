#include "glab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "glab/error.hpp"

namespace glab {

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw error(errc::unsupported, "image list is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::parse(const std::string& text, int degree) {
  Perm result = identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw error(errc::syntax_error, "expected '(' in cycle notation", i);
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
        throw error(errc::syntax_error, "expected a point or ')'", i);
      int v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v >= degree)
        throw error(errc::syntax_error, "point exceeds the permutation degree", i - 1);
      cyc.push_back(v);
    }
    any = true;
    std::vector<int> img = result.img_;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (img[static_cast<std::size_t>(from)] != from)
        throw error(errc::syntax_error, "cycles overlap", i - 1);
      img[static_cast<std::size_t>(from)] = to;
    }
    result = Perm(std::move(img));
    skip_ws();
  }
  if (!any) throw error(errc::syntax_error, "empty permutation text", 0);
  return result;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  Perm r;
  r.img_ = std::move(img);
  return r;
}

uint64_t Perm::order() const {
  uint64_t n = 1;
  for (const auto& c : cycles()) n = std::lcm(n, static_cast<uint64_t>(c.size()));
  return n;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw error(errc::group_mismatch, "permutation degrees differ");
  std::vector<int> img(p.img_.size());
  for (int i = 0; i < p.degree(); ++i)
    img[static_cast<std::size_t>(i)] = p(q(i));
  Perm r;
  r.img_ = std::move(img);
  return r;
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : img_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int s = 0; s < degree(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> cyc;
    int v = s;
    do {
      seen[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
      v = img_[static_cast<std::size_t>(v)];
    } while (v != s);
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << "(";
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ")";
  }
  return os.str();
}

}  // namespace glab
