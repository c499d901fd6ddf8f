#include <doctest.h>

#include <omp.h>

#include "qtcat/bijections.hpp"
#include "qtcat/generating.hpp"
#include "qtcat/kernels.hpp"

using namespace qtcat;
using kernels::Backend;

// Force several threads even on a single-core machine so the OpenMP paths
// really interleave.
struct ThreadSetup {
  ThreadSetup() { omp_set_num_threads(4); }
} const kThreads;

TEST_CASE("serial and OpenMP accumulation agree") {
  for (int n = 1; n <= 10; ++n) {
    REQUIRE(a_poly(n, {}, Backend::serial) == a_poly(n, {}, Backend::openmp));
    REQUIRE(cat_qt(n, {}, Backend::serial) == cat_qt(n, {}, Backend::openmp));
  }
  for (Pattern p : kAllPatterns) {
    for (auto o : {Orientation::plain, Orientation::complemented}) {
      REQUIRE(tristat_gf(8, p, o, {}, Backend::serial) == tristat_gf(8, p, o, {}, Backend::openmp));
    }
  }
}

TEST_CASE("find_first_violation returns the smallest index") {
  std::vector<int> xs(10000);
  for (int i = 0; i < 10000; ++i) xs[static_cast<std::size_t>(i)] = i;
  for (int bad : {0, 1, 63, 64, 5000, 9999}) {
    auto holds = [bad](const int& x) { return x < bad || x % 7 != bad % 7; };
    const auto s = kernels::find_first_violation(std::span<const int>(xs), holds, Backend::serial);
    const auto p = kernels::find_first_violation(std::span<const int>(xs), holds, Backend::openmp);
    REQUIRE(s.has_value());
    REQUIRE(*s == static_cast<std::size_t>(bad));
    REQUIRE(p == s);
  }
  auto always = [](const int&) { return true; };
  CHECK_FALSE(kernels::find_first_violation(std::span<const int>(xs), always, Backend::openmp).has_value());
  // A throwing predicate counts as a violation.
  auto throws_at_42 = [](const int& x) {
    if (x == 42) throw std::runtime_error("boom");
    return true;
  };
  CHECK(kernels::find_first_violation(std::span<const int>(xs), throws_at_42, Backend::openmp) == 42u);
}

TEST_CASE("transform preserves order and rethrows") {
  const auto perms = enumerate_avoiders(8, Pattern::p231);
  const auto s = kernels::transform(std::span<const Permutation>(perms), phi_unchecked, Backend::serial);
  const auto p = kernels::transform(std::span<const Permutation>(perms), phi_unchecked, Backend::openmp);
  CHECK(s == p);
  const auto all = enumerate_permutations(5);
  CHECK_THROWS_AS(kernels::transform(std::span<const Permutation>(all), phi, Backend::openmp), Error);
}

TEST_CASE("accumulation rethrows errors from the worker threads") {
  const auto all = enumerate_permutations(5);
  auto exponent = [](const Permutation& s) {
    const DyckPath d = phi(s);
    return Exponent{0, area(d), 0};
  };
  CHECK_THROWS_AS(kernels::accumulate_monomials(std::span<const Permutation>(all), exponent, Backend::openmp), Error);
}
