#pragma once

#include <cstdint>
#include <vector>

#include "qtcat/dyck.hpp"
#include "qtcat/error.hpp"
#include "qtcat/multipoly.hpp"

namespace qtcat {

/// Shift search for writing Cat_n(q,t) as
///   sum over D of q^(maj1(D) - k_D) t^(C(n,2) - maj0(D) - k_D),  k_D >= 0.
///
/// Path D may take monomial (x, y) of Cat_n exactly when
/// maj1(D) - x = C(n,2) - maj0(D) - y >= 0, which forces k_D; a valid
/// assignment is a perfect matching between D_n and the monomials of Cat_n
/// counted with multiplicity.
struct KdOptions {
  /// Enumerate the full solution set up to this n; above it, report one
  /// matching found by augmenting paths.
  int full_enumeration_max_n = 5;
  /// Stop enumerating after this many assignments (the set is then incomplete).
  std::uint64_t max_assignments = 100000;
  Limits limits;
};

struct KdSearchResult {
  int n = 0;
  std::vector<DyckPath> paths;  // D_n, lexicographic
  /// Each entry holds k_D for paths[i] at index i.
  std::vector<std::vector<int>> assignments;
  /// True when `assignments` is the whole solution set.
  bool complete = false;
  /// Number of distinct assignments.
  Coefficient count = 0;
};

/// Throws NoAssignment if no perfect matching exists.
KdSearchResult kd_search(int n, const KdOptions& options = {});

/// Exact number of assignments. Within one class of equal maj(D) the
/// compatibility relation is "x <= maj1(D)", which is nested, so the count is
/// a product of binomial coefficients taken over monomials by decreasing x.
Coefficient kd_assignment_count(int n, const Limits& limits = {});

/// One assignment from augmenting-path bipartite matching, or empty if none
/// exists.
std::vector<int> kd_find_one(int n, const Limits& limits = {});

/// True if `k` (indexed like enumerate_dyck(n)) reproduces Cat_n(q,t).
bool kd_assignment_valid(int n, const std::vector<int>& k, const Limits& limits = {});

}  // namespace qtcat
