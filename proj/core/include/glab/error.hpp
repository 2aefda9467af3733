#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glab {

enum class errc {
  bad_prime,
  not_irreducible,
  mixed_fields,
  division_by_zero,
  zero_polynomial,
  not_squarefree,
  order_bound_exceeded,
  enumeration_bound_exceeded,
  not_a_subgroup,
  group_mismatch,
  not_a_character,
  incomplete_decomposition,
  even_or_equal_two,
  ramified_place,
  infinite_place_unsupported,
  degree_mismatch,
  degenerate_galois_group,
  functional_equation_violated,
  singular_curve,
  syntax_error,
  unknown_generator,
  unknown_scenario,
  not_found,
  unsupported,
};

const char* to_string(errc c) noexcept;

/// Library-wide exception: a condition code plus a human-readable message.
/// Syntax errors additionally carry the offending character position.
class error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(to_string(c)) + ": " + msg), code_(c) {}

  error(errc c, const std::string& msg, std::size_t pos)
      : std::runtime_error(std::string(to_string(c)) + " at position " +
                           std::to_string(pos) + ": " + msg),
        code_(c),
        pos_(pos) {}

  errc code() const noexcept { return code_; }
  std::size_t position() const noexcept { return pos_; }

 private:
  errc code_;
  std::size_t pos_ = npos;
};

}  // namespace glab
