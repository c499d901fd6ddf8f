#include "qtcat/multipoly.hpp"

#include <algorithm>
#include <vector>

#include "qtcat/error.hpp"

namespace qtcat {

MultiPoly::MultiPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (e.a < 0 || e.q < 0 || e.t < 0) {
      throw Error(ErrorCode::NegativeExponent, "polynomial terms must have non-negative exponents");
    }
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

MultiPoly MultiPoly::constant(const Coefficient& c) { return monomial({}, c); }

MultiPoly MultiPoly::monomial(Exponent e, const Coefficient& c) {
  Terms terms;
  terms.emplace(e, c);
  return MultiPoly(std::move(terms));
}

Coefficient MultiPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

Coefficient MultiPoly::evaluate(long a, long q, long t) const {
  Coefficient total = 0;
  for (const auto& [e, c] : terms_) {
    Coefficient term = c;
    term *= boost::multiprecision::pow(Coefficient(a), static_cast<unsigned>(e.a));
    term *= boost::multiprecision::pow(Coefficient(q), static_cast<unsigned>(e.q));
    term *= boost::multiprecision::pow(Coefficient(t), static_cast<unsigned>(e.t));
    total += term;
  }
  return total;
}

void MultiPoly::add_term(const Exponent& e, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  MultiPoly product;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      product.add_term({e1.a + e2.a, e1.q + e2.q, e1.t + e2.t}, c1 * c2);
    }
  }
  *this = std::move(product);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Coefficient magnitude = negative ? Coefficient(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string vars;
    auto append_var = [&vars](char name, int power) {
      if (power == 0) return;
      if (!vars.empty()) vars += '*';
      vars += name;
      if (power > 1) vars += "^" + std::to_string(power);
    };
    append_var('a', e.a);
    append_var('q', e.q);
    append_var('t', e.t);

    if (vars.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += vars;
    } else {
      out += magnitude.str() + "*" + vars;
    }
  }
  return out;
}

MultiPoly q_integer(int k) {
  MultiPoly::Terms terms;
  for (int i = 0; i < k; ++i) terms.emplace(Exponent{0, i, 0}, 1);
  return MultiPoly(std::move(terms));
}

MultiPoly q_binomial(int k, int l) {
  if (k < 0 || l < 0 || l > k) {
    throw Error(ErrorCode::InvalidArgument,
                "q-binomial needs 0 <= l <= k, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
  }
  // Row k of the triangle: [k, j] = [k-1, j-1] + q^j [k-1, j].
  std::vector<MultiPoly> row{MultiPoly::constant(1)};
  for (int m = 1; m <= k; ++m) {
    std::vector<MultiPoly> next(static_cast<std::size_t>(m) + 1);
    next.front() = MultiPoly::constant(1);
    next.back() = MultiPoly::constant(1);
    for (int j = 1; j < m; ++j) {
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + MultiPoly::monomial({0, j, 0}) * row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(l)];
}

MultiPoly divide_exact_in_q(const MultiPoly& numerator, const MultiPoly& denominator) {
  auto dense = [](const MultiPoly& p) {
    std::vector<Coefficient> coeffs;
    for (const auto& [e, c] : p.terms()) {
      if (e.a != 0 || e.t != 0) throw Error(ErrorCode::InvalidArgument, "division is only defined in q alone");
      if (coeffs.size() <= static_cast<std::size_t>(e.q)) coeffs.resize(static_cast<std::size_t>(e.q) + 1);
      coeffs[static_cast<std::size_t>(e.q)] = c;
    }
    return coeffs;
  };
  if (denominator.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  std::vector<Coefficient> rem = dense(numerator);
  const std::vector<Coefficient> den = dense(denominator);
  const std::size_t dd = den.size() - 1;
  MultiPoly::Terms quotient;
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  while (rem.size() > dd) {
    const std::size_t shift = rem.size() - 1 - dd;
    const Coefficient& lead = rem.back();
    if (lead % den.back() != 0) throw Error(ErrorCode::Internal, "non-integral quotient coefficient");
    const Coefficient factor = lead / den.back();
    quotient.emplace(Exponent{0, static_cast<int>(shift), 0}, factor);
    for (std::size_t i = 0; i <= dd; ++i) rem[shift + i] -= factor * den[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty()) throw Error(ErrorCode::Internal, "inexact polynomial division");
  return MultiPoly(std::move(quotient));
}

MultiPoly specialize(const MultiPoly& p, const Specialization& mode) {
  MultiPoly out;
  if (std::holds_alternative<QtSwap>(mode)) {
    MultiPoly::Terms swapped;
    for (const auto& [e, c] : p.terms()) swapped.emplace(Exponent{e.a, e.t, e.q}, c);
    return MultiPoly(std::move(swapped));
  }
  const int shift = choose2(std::get<TToQInverseShifted>(mode).n);
  for (const auto& [e, c] : p.terms()) {
    const int power = e.q + shift - e.t;
    if (power < 0) {
      throw Error(ErrorCode::NegativeExponent, "q^" + std::to_string(power) + " after the shifted substitution t=1/q");
    }
    out += MultiPoly::monomial({e.a, power, 0}, c);
  }
  return out;
}

}  // namespace qtcat
