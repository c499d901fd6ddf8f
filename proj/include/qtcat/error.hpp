#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtcat {

enum class ErrorCode {
  // input text
  EmptyInput,
  NonBinaryCharacter,
  UnbalancedCounts,
  PrefixViolation,
  MalformedPermutation,
  InvalidArgument,
  // structural preconditions
  InvalidValleySet,
  InvalidDescentData,
  InvalidTableau,
  NotAvoiding231,
  NotAvoiding312,
  NotAvoiding132,
  NotAvoiding321,
  // computation
  ResourceLimit,
  NoAssignment,
  NegativeExponent,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Default ceiling on n for every exhaustive enumeration.
inline constexpr int kDefaultMaxN = 12;

struct Limits {
  int max_n = kDefaultMaxN;
};

/// Throws ResourceLimit if n exceeds the ceiling.
void check_limit(int n, const Limits& limits);

}  // namespace qtcat
