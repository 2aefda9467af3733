#pragma once

#include <cstdint>

namespace glab {

/// Coefficient-domain operations polynomial code needs beyond +,-,*,==.
/// Specialized per concrete domain; zero/one take a sample value because
/// some domains (finite-field elements) carry runtime context.
template <class T>
struct domain_traits;

/// Extra operations available when the domain is a field whose polynomial
/// ring supports factorization (finite fields and their extensions).
template <class T>
struct field_traits;

}  // namespace glab
