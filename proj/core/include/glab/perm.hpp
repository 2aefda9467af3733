#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glab {

/// Permutation of {0, ..., n-1}.  img_[i] is the image of i.
/// Composition (p*q) applies q first, then p.
class Perm {
 public:
  Perm() = default;  // degree 0
  explicit Perm(std::vector<int> img);

  static Perm identity(int n);

  /// Disjoint-cycle text on 0-based points, e.g. "(0 1 2)(3 4)"; "()" is the
  /// identity.  Points must be < degree; cycles must not overlap.
  static Perm parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  uint64_t order() const;

  friend Perm operator*(const Perm& p, const Perm& q);

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::size_t hash() const;

  /// Nontrivial cycles, each rotated to start at its smallest point, sorted
  /// by that point.
  std::vector<std::vector<int>> cycles() const;
  std::string str() const;  // "()" for the identity

 private:
  std::vector<int> img_;
};

}  // namespace glab

template <>
struct std::hash<glab::Perm> {
  std::size_t operator()(const glab::Perm& p) const noexcept { return p.hash(); }
};
