#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtcat/error.hpp"

namespace qtcat {

using Coefficient = boost::multiprecision::cpp_int;

/// Exponents of a^a q^q t^t; ordered lexicographically on (a, q, t).
struct Exponent {
  int a = 0;
  int q = 0;
  int t = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse polynomial in a, q, t with exact integer coefficients. No zero
/// coefficient is ever stored, so structural equality is polynomial equality.
class MultiPoly {
public:
  using Terms = std::map<Exponent, Coefficient>;

  MultiPoly() = default;
  /// Drops zero coefficients. Negative exponents are rejected.
  explicit MultiPoly(Terms terms);

  static MultiPoly constant(const Coefficient& c);
  static MultiPoly monomial(Exponent e, const Coefficient& c = 1);
  static MultiPoly a() { return monomial({1, 0, 0}); }
  static MultiPoly q() { return monomial({0, 1, 0}); }
  static MultiPoly t() { return monomial({0, 0, 1}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Coefficient coefficient(Exponent e) const;
  /// Value at integer point (a, q, t).
  Coefficient evaluate(long a, long q, long t) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(MultiPoly lhs, const MultiPoly& rhs) { return lhs *= rhs; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Terms in descending (a, q, t) order, e.g. "q^3*t^3 - q^2*t^2"; "0" for zero.
  std::string to_string() const;

private:
  void add_term(const Exponent& e, const Coefficient& c);

  Terms terms_;
};

/// [k]_q = 1 + q + ... + q^(k-1)
MultiPoly q_integer(int k);
/// Gaussian binomial via the q-Pascal recurrence. Throws InvalidArgument
/// unless 0 <= l <= k.
MultiPoly q_binomial(int k, int l);
/// Exact division of univariate polynomials in q. Throws Internal if the
/// division leaves a remainder or is not integral, InvalidArgument if either
/// operand involves a or t.
MultiPoly divide_exact_in_q(const MultiPoly& numerator, const MultiPoly& denominator);

struct QtSwap {};
/// q^(C(n,2)) * p(q, 1/q); requires every resulting exponent to be >= 0.
struct TToQInverseShifted {
  int n = 0;
};
using Specialization = std::variant<QtSwap, TToQInverseShifted>;

/// Throws NegativeExponent if the shifted substitution would leave a
/// negative power of q.
MultiPoly specialize(const MultiPoly& p, const Specialization& mode);

inline int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace qtcat
