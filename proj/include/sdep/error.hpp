#ifndef SDEP_ERROR_HPP
#define SDEP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sdep {

enum class ErrorKind {
  kDimensionMismatch,
  kShape,
  kDomain,
  kRange,
  kUnboundVariable,
  kPresentationExceedsG,
  kHomogeneity,
  kPartitionMismatch,
  kPrecondition,
  kMode,
  kResource,
  kParse,
  kNoWitness,
};

const char* to_string(ErrorKind kind);

/// The one exception type thrown by the library. `kind()` tells callers which
/// contract was violated; the message names the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sdep

#endif  // SDEP_ERROR_HPP
