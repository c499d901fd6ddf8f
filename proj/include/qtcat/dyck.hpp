#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qtcat/error.hpp"
#include "qtcat/permutation.hpp"

namespace qtcat {

/// A Dyck path of semilength n >= 1 stored as its 0/1 word (0 = north,
/// 1 = east). Positions are 1-based.
class DyckPath {
public:
  /// Validates the word; see parse_path for the error codes.
  explicit DyckPath(std::string word);

  int semilength() const noexcept { return static_cast<int>(word_.size() / 2); }
  int length() const noexcept { return static_cast<int>(word_.size()); }
  /// D_i as 0 or 1, 1 <= i <= 2n.
  int step(int i) const { return word_[static_cast<std::size_t>(i - 1)] - '0'; }
  const std::string& word() const noexcept { return word_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.word_ <=> b.word_; }

private:
  std::string word_;
};

/// Blanks are ignored. Errors: EmptyInput, NonBinaryCharacter,
/// PrefixViolation (an east step overtakes the north steps), UnbalancedCounts.
DyckPath parse_path(std::string_view text);

/// Valley coordinates: (xs_l, ys_l) is the lattice point right after the
/// east step of the l-th valley.
struct ValleySet {
  int n = 0;
  IndexSet xs;
  IndexSet ys;

  friend bool operator==(const ValleySet&, const ValleySet&) = default;
};

bool is_valid(const ValleySet& v);

struct PathStats {
  IndexSet des;  // {i : D_i = 1, D_{i+1} = 0}
  int maj = 0;
  int maj0 = 0;  // per descent, the number of 0's among positions <= i
  int maj1 = 0;  // per descent, the number of 1's among positions <= i
};

PathStats path_stats(const DyckPath& d);
ValleySet valleys(const DyckPath& d);
/// Inverse of valleys(); throws InvalidValleySet.
DyckPath from_valleys(const ValleySet& v);

/// Full cells strictly between the path and the diagonal.
int area(const DyckPath& d);
/// Bounce path from (0,0): north until the start of D's next east step, then
/// east to the diagonal, repeated. Sum of (n - a) over interior touches (a, a).
int bounce(const DyckPath& d);
/// Interior diagonal touch points of the bounce path, increasing.
std::vector<int> bounce_touches(const DyckPath& d);

/// Complement involution: Set_X' = [n-1] \ Set_Y, Set_Y' = [n-1] \ Set_X.
DyckPath psi_complement(const DyckPath& d);
/// Valley (i, j) -> (n-j, n-i).
DyckPath reflect(const DyckPath& d);
/// reflect(psi_complement(d)).
inline DyckPath reflect_complement(const DyckPath& d) { return reflect(psi_complement(d)); }

/// All Dyck paths of semilength n in lexicographic order of the word.
std::vector<DyckPath> enumerate_dyck(int n, const Limits& limits = {});

}  // namespace qtcat
