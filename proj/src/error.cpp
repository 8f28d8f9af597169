#include "equigeo/error.hpp"

namespace equigeo {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::InvariantFailure: return "invariant-failure";
    case ErrorKind::Degenerate: return "degenerate-input";
    case ErrorKind::DecompositionInvalid: return "decomposition-invalid";
    case ErrorKind::UndeterminedDecomposition: return "undetermined-decomposition";
    case ErrorKind::Ordering: return "ordering";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::EmptyComplement: return "empty-complement";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

}  // namespace equigeo
