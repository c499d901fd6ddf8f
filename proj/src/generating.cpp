#include "qtcat/generating.hpp"

#include "qtcat/dyck.hpp"
#include "qtcat/series.hpp"

namespace qtcat {

namespace {

void require_positive(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
}

}  // namespace

MultiPoly a_poly(int n, const Limits& limits, Backend backend) {
  require_positive(n);
  const auto perms = enumerate_avoiders(n, Pattern::p231, limits);
  const int c2 = choose2(n);
  return kernels::accumulate_monomials(
      std::span<const Permutation>(perms),
      [c2](const Permutation& s) {
        const PermStats st = perm_stats(s);
        return Exponent{0, st.maj, c2 - st.imaj};
      },
      backend);
}

MultiPoly a_poly_via_dyck(int n, const Limits& limits, Backend backend) {
  require_positive(n);
  const auto paths = enumerate_dyck(n, limits);
  const int c2 = choose2(n);
  return kernels::accumulate_monomials(
      std::span<const DyckPath>(paths),
      [c2](const DyckPath& d) {
        const PathStats st = path_stats(d);
        return Exponent{0, st.maj1, c2 - st.maj0};
      },
      backend);
}

MultiPoly cat_qt(int n, const Limits& limits, Backend backend) {
  require_positive(n);
  const auto paths = enumerate_dyck(n, limits);
  return kernels::accumulate_monomials(
      std::span<const DyckPath>(paths), [](const DyckPath& d) { return Exponent{0, area(d), bounce(d)}; }, backend);
}

MultiPoly macmahon_q_catalan(int n, const Limits& limits, Backend backend) {
  require_positive(n);
  const auto paths = enumerate_dyck(n, limits);
  return kernels::accumulate_monomials(
      std::span<const DyckPath>(paths), [](const DyckPath& d) { return Exponent{0, path_stats(d).maj, 0}; },
      backend);
}

MultiPoly macmahon_by_division(int n) {
  require_positive(n);
  return divide_exact_in_q(q_binomial(2 * n, n), q_integer(n + 1));
}

MultiPoly tristat_gf(int n, Pattern pattern, Orientation orientation, const Limits& limits, Backend backend) {
  require_positive(n);
  const auto perms = enumerate_avoiders(n, pattern, limits);
  const int c2 = choose2(n);
  return kernels::accumulate_monomials(
      std::span<const Permutation>(perms),
      [=](const Permutation& s) {
        const PermStats st = perm_stats(s);
        if (orientation == Orientation::plain) return Exponent{st.des, st.maj, st.imaj};
        return Exponent{n - 1 - st.des, c2 - st.maj, c2 - st.imaj};
      },
      backend);
}

std::vector<MultiPoly> gf_identity_residuals(std::span<const MultiPoly> a_polys, GfDenominator form) {
  if (a_polys.empty()) throw Error(ErrorCode::InvalidArgument, "need at least A_0");
  const int order = static_cast<int>(a_polys.size()) - 1;
  auto factor = [order](int qe, int te) {
    return TruncatedSeries::inverse_of_one_plus(MultiPoly::monomial({0, qe, te}), order);
  };
  TruncatedSeries total(order);
  // Running inverse of the denominator, extended by one q- and one t-factor per n.
  TruncatedSeries denominator_inverse = TruncatedSeries::one(order);
  if (form == GfDenominator::shifted) denominator_inverse *= factor(0, 0);
  for (int n = 0; n <= order; ++n) {
    const int i = form == GfDenominator::shifted ? n : n + 1;
    if (i >= 1) {
      denominator_inverse *= factor(i, 0);
      denominator_inverse *= factor(0, i);
    }
    total += denominator_inverse.shifted(n, a_polys[static_cast<std::size_t>(n)]);
  }
  total -= TruncatedSeries::one(order);
  return total.coefficients();
}

std::vector<MultiPoly> verify_gf_identity(int order, GfDenominator form, const Limits& limits) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be non-negative");
  check_limit(order, limits);
  std::vector<MultiPoly> a_polys{MultiPoly::constant(1)};
  for (int n = 1; n <= order; ++n) a_polys.push_back(a_poly(n, limits));
  return gf_identity_residuals(a_polys, form);
}

long long catalan_number(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  std::vector<long long> c{1};
  for (int m = 1; m <= n; ++m) {
    long long next = 0;
    for (int k = 0; k < m; ++k) next += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
    c.push_back(next);
  }
  return c[static_cast<std::size_t>(n)];
}

}  // namespace qtcat
