#ifndef QRF_ERRORS_HPP
#define QRF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input / parsing
struct MalformedDocument : Error { using Error::Error; };
struct NotAGroup : Error { using Error::Error; };
struct EvenModulus : Error { using Error::Error; };
struct InvalidTable : Error { using Error::Error; };

// labeled-operator machinery
struct IndexOutOfRange : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct EmptyGenerators : Error { using Error::Error; };

// perspectives and transforms
struct IncompleteIrrepTable : Error { using Error::Error; };
struct DimBudgetExceeded : Error { using Error::Error; };
struct ValidationFailure : Error { using Error::Error; };
struct NotAState : Error { using Error::Error; };
struct NotLeftInvariant : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct UnknownDemo : Error { using Error::Error; };

}  // namespace qrf

#endif
