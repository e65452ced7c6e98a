#include "sdep/error.hpp"

namespace sdep {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "dimension mismatch";
    case ErrorKind::kShape: return "shape error";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kRange: return "range error";
    case ErrorKind::kUnboundVariable: return "unbound variable";
    case ErrorKind::kPresentationExceedsG: return "presentation exceeds g";
    case ErrorKind::kHomogeneity: return "inhomogeneous relation";
    case ErrorKind::kPartitionMismatch: return "partition mismatch";
    case ErrorKind::kPrecondition: return "precondition violated";
    case ErrorKind::kMode: return "mode error";
    case ErrorKind::kResource: return "resource limit";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kNoWitness: return "no witness";
  }
  return "error";
}

}  // namespace sdep
