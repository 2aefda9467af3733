#include "glab/error.hpp"

namespace glab {

const char* to_string(errc c) noexcept {
  switch (c) {
    case errc::bad_prime: return "BadPrime";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::mixed_fields: return "MixedFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::order_bound_exceeded: return "OrderBoundExceeded";
    case errc::enumeration_bound_exceeded: return "EnumerationBoundExceeded";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::not_a_character: return "NotACharacter";
    case errc::incomplete_decomposition: return "IncompleteDecomposition";
    case errc::even_or_equal_two: return "EvenOrEqualTwo";
    case errc::ramified_place: return "RamifiedPlace";
    case errc::infinite_place_unsupported: return "InfinitePlaceUnsupported";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::degenerate_galois_group: return "DegenerateGaloisGroup";
    case errc::functional_equation_violated: return "FunctionalEquationViolated";
    case errc::singular_curve: return "SingularCurve";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_generator: return "UnknownGenerator";
    case errc::unknown_scenario: return "UnknownScenario";
    case errc::not_found: return "NotFound";
    case errc::unsupported: return "Unsupported";
  }
  return "Error";
}

}  // namespace glab
