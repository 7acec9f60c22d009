#pragma once

#include <stdexcept>
#include <string>

namespace opext {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAdmissible : Error { using Error::Error; };
struct NonConfluent : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct RelationViolation : Error { using Error::Error; };
struct NotRepFinite : Error { using Error::Error; };
struct SearchBudgetExceeded : Error { using Error::Error; };
struct FieldTooSmall : Error { using Error::Error; };
struct DecompositionInconclusive : Error { using Error::Error; };
struct TransportFailure : Error { using Error::Error; };
struct NotCertified : Error { using Error::Error; };
struct ComparisonFailure : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace opext
