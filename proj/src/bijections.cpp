#include "qtcat/bijections.hpp"

#include <string>

namespace qtcat {

void require_avoids(const Permutation& sigma, Pattern p) {
  if (avoids(sigma, p)) return;
  ErrorCode code = ErrorCode::InvalidArgument;
  switch (p) {
    case Pattern::p231: code = ErrorCode::NotAvoiding231; break;
    case Pattern::p312: code = ErrorCode::NotAvoiding312; break;
    case Pattern::p132: code = ErrorCode::NotAvoiding132; break;
    case Pattern::p321: code = ErrorCode::NotAvoiding321; break;
    default: break;
  }
  throw Error(code, sigma.to_string() + " contains the pattern " + std::string(pattern_name(p)));
}

DyckPath phi_unchecked(const Permutation& sigma) {
  ValleySet v;
  v.n = sigma.size();
  v.xs = descent_set(sigma);
  v.ys = descent_set(inverse(sigma));
  return from_valleys(v);
}

DyckPath phi(const Permutation& sigma) {
  require_avoids(sigma, Pattern::p231);
  return phi_unchecked(sigma);
}

Permutation phi_inv(const DyckPath& d) {
  const ValleySet v = valleys(d);
  return reconstruct_231(v.n, v.xs, v.ys);
}

Permutation psi_perm_unchecked(const Permutation& sigma) {
  const int n = sigma.size();
  const IndexSet des = descent_set(sigma);
  const IndexSet ides = descent_set(inverse(sigma));
  return reconstruct_231(n, complement_in_range(ides, n), complement_in_range(des, n));
}

Permutation psi_perm(const Permutation& sigma) {
  require_avoids(sigma, Pattern::p231);
  return psi_perm_unchecked(sigma);
}

std::vector<int> heights(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> h(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (sigma(j) > sigma(i)) ++h[static_cast<std::size_t>(i - 1)];
    }
  }
  return h;
}

bool avoids_132_by_heights(const std::vector<int>& h) {
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    if (h[i + 1] < h[i] - 1) return false;
  }
  return true;
}

DyckPath kappa_unchecked(const Permutation& sigma) {
  std::string word;
  word.reserve(static_cast<std::size_t>(2 * sigma.size()));
  int height = 0;
  for (int h : heights(sigma)) {
    word.append(static_cast<std::size_t>(h + 1 - height), '0');
    word.push_back('1');
    height = h;
  }
  return DyckPath(std::move(word));
}

DyckPath kappa(const Permutation& sigma) {
  if (!avoids_132_by_heights(heights(sigma))) {
    throw Error(ErrorCode::NotAvoiding132, sigma.to_string() + " contains the pattern 132");
  }
  return kappa_unchecked(sigma);
}

DyckPath kappa_factored(const Permutation& sigma) {
  require_avoids(sigma, Pattern::p132);
  return reflect_complement(phi_unchecked(reverse_rho(sigma)));
}

DyckPath beta(const Permutation& sigma) {
  require_avoids(sigma, Pattern::p312);
  return psi_complement(phi_unchecked(inverse(sigma)));
}

Permutation trio_132_213(const Permutation& sigma) {
  require_avoids(sigma, Pattern::p132);
  return reverse_rho(inverse(psi_perm_unchecked(reverse_rho(sigma))));
}

}  // namespace qtcat
