#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtcat/error.hpp"

namespace qtcat {

/// Strictly increasing list of 1-based positions or values.
using IndexSet = std::vector<int>;

/// A permutation of {1..n} in one-line notation. Immutable once built.
class Permutation {
public:
  /// Validates that `word` is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }

  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& word() const noexcept { return word_; }

  /// "[6,2,1,5,4,3]"
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

private:
  std::vector<int> word_;
};

/// Accepts "[6,2,1,5,4,3]", "6,2,1,5,4,3", or the compact digit form "231"
/// (single-digit entries only). Blanks are ignored.
Permutation parse_permutation(std::string_view text);

/// Descent machinery with the convention that n always counts as an ascent:
///   asc  = ({1..n-1} \ des)  U {n}
///   iasc = ({1..n-1} \ ides) U {n}
/// ides is the descent set of the inverse.
struct DescentData {
  IndexSet des;
  IndexSet asc;
  IndexSet ides;
  IndexSet iasc;
};

IndexSet descent_set(const Permutation& sigma);
DescentData descent_data(const Permutation& sigma);

struct PermStats {
  int des = 0;
  int asc = 0;  // includes the ascent at n
  int maj = 0;
  int imaj = 0;
  int inv = 0;
};

PermStats perm_stats(const Permutation& sigma);
int inversions(const Permutation& sigma);

Permutation inverse(const Permutation& sigma);
/// rho: [s_1,...,s_n] -> [s_n,...,s_1]
Permutation reverse_rho(const Permutation& sigma);
/// s_i -> n+1-s_i
Permutation complement(const Permutation& sigma);

enum class Pattern { p123, p132, p213, p231, p312, p321 };

inline constexpr Pattern kAllPatterns[] = {Pattern::p123, Pattern::p132, Pattern::p213,
                                           Pattern::p231, Pattern::p312, Pattern::p321};

std::string_view pattern_name(Pattern p);
Permutation pattern_permutation(Pattern p);
std::optional<Pattern> as_s3_pattern(const Permutation& tau);
/// "231" -> Pattern::p231; throws InvalidArgument otherwise.
Pattern parse_pattern(std::string_view text);

/// Subsequence scan over all |tau|-subsets of positions. Reference oracle.
bool avoids_naive(const Permutation& sigma, const Permutation& tau);
/// Linear-time recognizers (stack sorting for 132/213/231/312, running
/// minima for 123/321).
bool avoids(const Permutation& sigma, Pattern tau);
/// Uses the linear recognizer when tau is in S_3, the naive scan otherwise.
bool avoids(const Permutation& sigma, const Permutation& tau);

/// Visits every tau-avoiding permutation of size n in lexicographic order.
void for_each_avoider(int n, const Permutation& tau, const std::function<void(const Permutation&)>& visit,
                      const Limits& limits = {});
std::vector<Permutation> enumerate_avoiders(int n, const Permutation& tau, const Limits& limits = {});
std::vector<Permutation> enumerate_avoiders(int n, Pattern tau, const Limits& limits = {});
/// All of S_n, lexicographic.
std::vector<Permutation> enumerate_permutations(int n, const Limits& limits = {});

/// Size of the descent block immediately left of the ascent j: j-1-j' with
/// j' the previous ascent (0 if none). Throws InvalidArgument if j is not an
/// ascent.
int tau_offset(const Permutation& sigma, int j);

/// The unique 231-avoiding permutation with the given descent set and inverse
/// descent set. Throws InvalidDescentData if no such permutation exists.
Permutation reconstruct_231(int n, const IndexSet& des, const IndexSet& ides);

/// [n-1] \ s
IndexSet complement_in_range(const IndexSet& s, int n);

}  // namespace qtcat
