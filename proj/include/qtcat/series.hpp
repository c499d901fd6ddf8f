#pragma once

#include <vector>

#include "qtcat/multipoly.hpp"

namespace qtcat {

/// Power series in z with MultiPoly coefficients, truncated after z^order.
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<MultiPoly> coefficients);

  static TruncatedSeries one(int order);
  /// 1 / (1 + m z) = sum_k (-m)^k z^k for a polynomial m.
  static TruncatedSeries inverse_of_one_plus(const MultiPoly& m, int order);

  int order() const noexcept { return order_; }
  /// Coefficient of z^k, 0 <= k <= order.
  const MultiPoly& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<MultiPoly>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries l, const TruncatedSeries& r) { return l += r; }
  friend TruncatedSeries operator-(TruncatedSeries l, const TruncatedSeries& r) { return l -= r; }
  friend TruncatedSeries operator*(TruncatedSeries l, const TruncatedSeries& r) { return l *= r; }

  /// Multiplies by c * z^shift, dropping everything above the order.
  TruncatedSeries shifted(int shift, const MultiPoly& c) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  int order_;
  std::vector<MultiPoly> coeffs_;
};

}  // namespace qtcat
