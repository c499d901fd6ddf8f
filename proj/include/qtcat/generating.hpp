#pragma once

#include <span>
#include <vector>

#include "qtcat/error.hpp"
#include "qtcat/kernels.hpp"
#include "qtcat/multipoly.hpp"
#include "qtcat/permutation.hpp"

namespace qtcat {

using kernels::Backend;

/// A_n(q,t) = sum over S_n(231) of q^maj t^(C(n,2) - imaj).
MultiPoly a_poly(int n, const Limits& limits = {}, Backend backend = Backend::openmp);
/// The same polynomial summed over D_n as q^maj1 t^(C(n,2) - maj0).
MultiPoly a_poly_via_dyck(int n, const Limits& limits = {}, Backend backend = Backend::openmp);

/// Cat_n(q,t) = sum over D_n of q^area t^bounce.
MultiPoly cat_qt(int n, const Limits& limits = {}, Backend backend = Backend::openmp);

/// sum over D_n of q^maj(D).
MultiPoly macmahon_q_catalan(int n, const Limits& limits = {}, Backend backend = Backend::openmp);
/// q_binomial(2n, n) / [n+1]_q, exactly.
MultiPoly macmahon_by_division(int n);

enum class Orientation { plain, complemented };

/// plain:        sum a^des q^maj t^imaj
/// complemented: sum a^(n-1-des) q^(C(n,2)-maj) t^(C(n,2)-imaj)
/// over the permutations of size n avoiding `pattern`.
MultiPoly tristat_gf(int n, Pattern pattern, Orientation orientation, const Limits& limits = {},
                     Backend backend = Backend::openmp);

/// Denominator attached to A_n z^n in the generating-function identity.
///   through_n_plus_1: prod_{i=1..n+1} (1 + q^i z)(1 + t^i z)
///   shifted:     (1 + z) prod_{i=1..n} (1 + q^i z)(1 + t^i z)
/// Only the shifted form sums to 1; the through_n_plus_1 form already leaves
/// 1 - q - t at z^1 (and 1/(1+z) overall at q = t = 1).
enum class GfDenominator { through_n_plus_1, shifted };

/// Residuals r_0..r_N of
///   sum_{n=0..N} A_n z^n / denominator_n  -  1
/// truncated after z^N, with a_polys[n] = A_n (a_polys[0] = 1).
std::vector<MultiPoly> gf_identity_residuals(std::span<const MultiPoly> a_polys,
                                             GfDenominator form = GfDenominator::shifted);

/// Residuals with A_0 = 1 and A_n = a_poly(n) for 1 <= n <= N.
std::vector<MultiPoly> verify_gf_identity(int order, GfDenominator form = GfDenominator::shifted,
                                          const Limits& limits = {});

/// Catalan numbers by the convolution recurrence; 64-bit is exact through n = 35.
long long catalan_number(int n);

}  // namespace qtcat
