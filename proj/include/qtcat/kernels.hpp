#pragma once

// Data-parallel loops over enumerated objects. Every kernel has a serial
// reference path and an OpenMP path; both produce identical results.

#include <cstddef>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <omp.h>

#include "qtcat/multipoly.hpp"

namespace qtcat::kernels {

enum class Backend { serial, openmp };

namespace detail {

using Histogram = std::map<Exponent, long long>;

inline MultiPoly to_poly(const Histogram& h) {
  MultiPoly::Terms terms;
  for (const auto& [e, count] : h) terms.emplace(e, count);
  return MultiPoly(std::move(terms));
}

}  // namespace detail

/// Sum of the monomials exponent_of(x) over all items.
template <class T, class ExponentOf>
MultiPoly accumulate_monomials(std::span<const T> items, ExponentOf&& exponent_of, Backend backend = Backend::openmp) {
  detail::Histogram merged;
  if (backend == Backend::serial) {
    for (const T& x : items) ++merged[exponent_of(x)];
    return detail::to_poly(merged);
  }

  const auto size = static_cast<std::ptrdiff_t>(items.size());
  std::exception_ptr failure;
#pragma omp parallel
  {
    detail::Histogram local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      try {
        ++local[exponent_of(items[static_cast<std::size_t>(i)])];
      } catch (...) {
#pragma omp critical(qtcat_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    // Counts add, so the merge order does not affect the result.
#pragma omp critical(qtcat_accumulate_merge)
    for (const auto& [e, count] : local) merged[e] += count;
  }
  if (failure) std::rethrow_exception(failure);
  return detail::to_poly(merged);
}

/// Index of the first item for which `holds` is false (or throws).
template <class T, class Predicate>
std::optional<std::size_t> find_first_violation(std::span<const T> items, Predicate&& holds,
                                                Backend backend = Backend::openmp) {
  auto violates = [&](const T& x) {
    try {
      return !holds(x);
    } catch (...) {
      return true;
    }
  };
  if (backend == Backend::serial) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (violates(items[i])) return i;
    }
    return std::nullopt;
  }

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::size_t first = none;
  const auto size = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < first && violates(items[idx])) first = idx;
  }
  if (first == none) return std::nullopt;
  return first;
}

/// out[i] = f(items[i]).
template <class T, class F>
auto transform(std::span<const T> items, F&& f, Backend backend = Backend::openmp) {
  using R = std::decay_t<decltype(f(items[0]))>;
  std::vector<std::optional<R>> slots(items.size());
  if (backend == Backend::serial) {
    for (std::size_t i = 0; i < items.size(); ++i) slots[i].emplace(f(items[i]));
  } else {
    const auto size = static_cast<std::ptrdiff_t>(items.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(f(items[static_cast<std::size_t>(i)]));
      } catch (...) {
#pragma omp critical(qtcat_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace qtcat::kernels
