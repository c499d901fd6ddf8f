#include "qtcat/error.hpp"

namespace qtcat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonBinaryCharacter: return "NonBinaryCharacter";
    case ErrorCode::UnbalancedCounts: return "UnbalancedCounts";
    case ErrorCode::PrefixViolation: return "PrefixViolation";
    case ErrorCode::MalformedPermutation: return "MalformedPermutation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidValleySet: return "InvalidValleySet";
    case ErrorCode::InvalidDescentData: return "InvalidDescentData";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::NotAvoiding231: return "NotAvoiding231";
    case ErrorCode::NotAvoiding312: return "NotAvoiding312";
    case ErrorCode::NotAvoiding132: return "NotAvoiding132";
    case ErrorCode::NotAvoiding321: return "NotAvoiding321";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NoAssignment: return "NoAssignment";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void check_limit(int n, const Limits& limits) {
  if (n > limits.max_n) {
    throw Error(ErrorCode::ResourceLimit, "n=" + std::to_string(n) + " exceeds the enumeration ceiling " +
                                              std::to_string(limits.max_n));
  }
}

}  // namespace qtcat
