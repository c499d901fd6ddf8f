#include "qtcat/series.hpp"

#include "qtcat/error.hpp"

namespace qtcat {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<MultiPoly> coefficients) : TruncatedSeries(order) {
  if (coefficients.size() > coeffs_.size()) coefficients.resize(coeffs_.size());
  for (std::size_t k = 0; k < coefficients.size(); ++k) coeffs_[k] = std::move(coefficients[k]);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = MultiPoly::constant(1);
  return s;
}

TruncatedSeries TruncatedSeries::inverse_of_one_plus(const MultiPoly& m, int order) {
  TruncatedSeries s(order);
  const MultiPoly minus_m = -m;
  MultiPoly power = MultiPoly::constant(1);
  for (int k = 0; k <= order; ++k) {
    s.coeffs_[static_cast<std::size_t>(k)] = power;
    power *= minus_m;
  }
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order_ != order_) throw Error(ErrorCode::InvalidArgument, "series orders differ");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order_ != order_) throw Error(ErrorCode::InvalidArgument, "series orders differ");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  if (other.order_ != order_) throw Error(ErrorCode::InvalidArgument, "series orders differ");
  std::vector<MultiPoly> product(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
      if (other.coeffs_[j].is_zero()) continue;
      product[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(product);
  return *this;
}

TruncatedSeries TruncatedSeries::shifted(int shift, const MultiPoly& c) const {
  TruncatedSeries out(order_);
  for (int k = 0; k + shift <= order_; ++k) {
    out.coeffs_[static_cast<std::size_t>(k + shift)] = coeffs_[static_cast<std::size_t>(k)] * c;
  }
  return out;
}

}  // namespace qtcat
