#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtcat/error.hpp"
#include "qtcat/kernels.hpp"

namespace qtcat {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Summary such as "n=1..8, 2055 objects" or the reason for failure.
  std::string detail;
  /// Smallest failing object (by n, then lexicographically), if any.
  std::string counterexample;
};

struct VerifyOptions {
  Limits limits;
  kernels::Backend backend = kernels::Backend::openmp;
};

/// Checks that scan all of S_n stop at this size; above it they sample.
inline constexpr int kExhaustiveSymmetricMax = 8;

/// phi, lemmas, kappa-factorization, inv-area, symmetry, gf-identity,
/// tristat, rsk-j, kd
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite) for n = 1..n_max. Throws
/// InvalidArgument for an unknown suite and ResourceLimit above the ceiling.
std::vector<CheckResult> run_suite(std::string_view suite, int n_max, const VerifyOptions& options = {});

}  // namespace qtcat
