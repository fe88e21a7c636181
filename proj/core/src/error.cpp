#include "hyp/error.hpp"

namespace hyp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DegreeCap: return "DegreeCap";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::InvalidRep: return "InvalidRep";
    case ErrorKind::NotEnumerable: return "NotEnumerable";
    case ErrorKind::NotUnivariateTorus: return "NotUnivariateTorus";
    case ErrorKind::Validation: return "Validation";
  }
  return "Unknown";
}

}  // namespace hyp
