#pragma once

#include <utility>
#include <vector>

#include "qtcat/error.hpp"
#include "qtcat/permutation.hpp"

namespace qtcat {

/// Standard Young tableau in English notation: row 0 on top, rows and
/// columns strictly increasing, row lengths weakly decreasing, entries 1..n.
class StandardTableau {
public:
  /// Validates; throws InvalidTableau.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  int size() const noexcept { return n_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  std::vector<int> shape() const;
  /// Row index (0-based) holding `entry`.
  int row_of(int entry) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

struct RskPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

/// Robinson-Schensted row insertion.
RskPair rsk(const Permutation& sigma);
/// Reverse bumping driven by the recording tableau's largest entries.
Permutation inverse_rsk(const StandardTableau& insertion, const StandardTableau& recording);

/// {i : i+1 sits in a strictly lower row than i}
IndexSet tableau_descents(const StandardTableau& t);

/// Schuetzenberger evacuation: repeatedly delete the minimum, slide the hole
/// out by jeu de taquin, and label the vacated cell n, n-1, ..., 1.
StandardTableau evacuation(const StandardTableau& t);

/// (P, Q) -> (evacuation(P), Q) on S_n(321). Keeps Des, sends iDes to
/// {n - j : j in iDes}. Throws NotAvoiding321.
Permutation j_involution(const Permutation& sigma);

/// Integer partitions of n, largest parts first, in decreasing lexicographic order.
std::vector<std::vector<int>> partitions(int n);
/// All standard tableaux of the given shape, lexicographic by reading word.
std::vector<StandardTableau> enumerate_syt(const std::vector<int>& shape);
/// All standard tableaux with n cells.
std::vector<StandardTableau> enumerate_syt(int n);

}  // namespace qtcat
