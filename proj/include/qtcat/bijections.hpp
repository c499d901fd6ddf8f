#pragma once

#include <vector>

#include "qtcat/dyck.hpp"
#include "qtcat/permutation.hpp"

namespace qtcat {

/// The bijection S_n(231) -> D_n sending (Des, iDes) to (Set_X, Set_Y), so
/// that maj(phi(s)) = maj(s) + imaj(s). Throws NotAvoiding231.
DyckPath phi(const Permutation& sigma);
/// phi without the 231 precondition check, for enumeration loops whose
/// input is known to avoid 231.
DyckPath phi_unchecked(const Permutation& sigma);
/// reconstruct_231(n, Set_X(d), Set_Y(d)).
Permutation phi_inv(const DyckPath& d);

/// Involution on S_n(231): Des -> [n-1] \ iDes, iDes -> [n-1] \ Des.
Permutation psi_perm(const Permutation& sigma);
Permutation psi_perm_unchecked(const Permutation& sigma);

/// h_i = |{j > i : s_j > s_i}|.
std::vector<int> heights(const Permutation& sigma);
/// sigma avoids 132 iff h_{i+1} >= h_i - 1 for all i < n.
bool avoids_132_by_heights(const std::vector<int>& h);

/// Height-driven bijection S_n(132) -> D_n: for each entry, north steps up
/// to height h_i + 1, then one east step down to h_i. Throws NotAvoiding132.
DyckPath kappa(const Permutation& sigma);
DyckPath kappa_unchecked(const Permutation& sigma);
/// reflect(psi_complement(phi(reverse_rho(sigma)))). Throws NotAvoiding132.
DyckPath kappa_factored(const Permutation& sigma);

/// psi_complement(phi(inverse(sigma))) on S_n(312). Throws NotAvoiding312.
DyckPath beta(const Permutation& sigma);

/// rho . inverse . psi_perm . rho : S_n(132) -> S_n(213), sending
/// (des, maj, imaj) to (n-1-des, C(n,2)-maj, C(n,2)-imaj). Throws NotAvoiding132.
Permutation trio_132_213(const Permutation& sigma);

/// Throws the NotAvoidingXXX error matching `p` unless sigma avoids it.
void require_avoids(const Permutation& sigma, Pattern p);

}  // namespace qtcat
