#include "qtcat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

namespace qtcat {

namespace {

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::MalformedPermutation, "'" + std::string(text) + "': " + why);
}

bool is_strictly_increasing_in(const IndexSet& s, int lo, int hi) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < lo || s[k] > hi) return false;
    if (k > 0 && s[k - 1] >= s[k]) return false;
  }
  return true;
}

// Stack sorting succeeds iff the word avoids 231.
bool stack_sortable(const std::vector<int>& w) {
  std::vector<int> stack;
  stack.reserve(w.size());
  int next_out = 1;
  for (int x : w) {
    while (!stack.empty() && stack.back() < x) {
      if (stack.back() != next_out) return false;
      stack.pop_back();
      ++next_out;
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    if (stack.back() != next_out) return false;
    stack.pop_back();
    ++next_out;
  }
  return true;
}

bool has_increasing_triple(const std::vector<int>& w) {
  int lowest = w.empty() ? 0 : w.front();
  int second = std::numeric_limits<int>::max();  // smallest end of an increasing pair
  for (int x : w) {
    if (x > second) return true;
    if (x > lowest) second = std::min(second, x);
    lowest = std::min(lowest, x);
  }
  return false;
}

std::vector<int> reversed(const std::vector<int>& w) { return {w.rbegin(), w.rend()}; }

std::vector<int> complemented(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out(w.size());
  std::transform(w.begin(), w.end(), out.begin(), [n](int x) { return n + 1 - x; });
  return out;
}

// True if prefix[0..m] holds an occurrence of tau whose last entry is prefix[m].
bool occurrence_ending_at(const std::vector<int>& prefix, std::size_t m, const std::vector<int>& tau) {
  const std::size_t k = tau.size();
  if (k == 0) return true;
  if (m + 1 < k) return false;
  std::vector<int> chosen(k);
  chosen[k - 1] = prefix[m];
  auto consistent = [&](std::size_t p, int v) {
    for (std::size_t q = 0; q < p; ++q) {
      if ((v < chosen[q]) != (tau[p] < tau[q])) return false;
    }
    return (v < chosen[k - 1]) == (tau[p] < tau[k - 1]);
  };
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t p, std::size_t start) -> bool {
    if (p + 1 == k) return true;
    for (std::size_t pos = start; pos + (k - 1 - p) <= m; ++pos) {
      if (!consistent(p, prefix[pos])) continue;
      chosen[p] = prefix[pos];
      if (pick(p + 1, pos + 1)) return true;
    }
    return false;
  };
  return pick(0, 0);
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n < 1) throw Error(ErrorCode::MalformedPermutation, "permutation must have at least one entry");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::MalformedPermutation, to_string() + " is not a permutation of {1.." +
                                                       std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  out += ']';
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "empty permutation text");
  if (s.front() == '[' || s.back() == ']') {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') malformed(text, "unbalanced brackets");
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "permutation has no entries");

  std::vector<int> word;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) malformed(text, "unexpected character");
      word.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t end = std::min(s.find(',', pos), s.size());
      int value = 0;
      const char* first = s.data() + pos;
      const char* last = s.data() + end;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || first == last) malformed(text, "bad entry");
      word.push_back(value);
      pos = end + 1;
    }
  }
  try {
    return Permutation(std::move(word));
  } catch (const Error&) {
    malformed(text, "not a permutation of {1..n}");
  }
}

IndexSet descent_set(const Permutation& sigma) {
  IndexSet des;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i + 1)) des.push_back(i);
  }
  return des;
}

IndexSet complement_in_range(const IndexSet& s, int n) {
  IndexSet out;
  std::size_t k = 0;
  for (int i = 1; i < n; ++i) {
    if (k < s.size() && s[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

DescentData descent_data(const Permutation& sigma) {
  const int n = sigma.size();
  DescentData d;
  d.des = descent_set(sigma);
  d.ides = descent_set(inverse(sigma));
  d.asc = complement_in_range(d.des, n);
  d.asc.push_back(n);
  d.iasc = complement_in_range(d.ides, n);
  d.iasc.push_back(n);
  return d;
}

int inversions(const Permutation& sigma) {
  int inv = 0;
  const auto& w = sigma.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++inv;
    }
  }
  return inv;
}

PermStats perm_stats(const Permutation& sigma) {
  const IndexSet des = descent_set(sigma);
  const IndexSet ides = descent_set(inverse(sigma));
  PermStats s;
  s.des = static_cast<int>(des.size());
  s.asc = sigma.size() - s.des;
  s.maj = std::accumulate(des.begin(), des.end(), 0);
  s.imaj = std::accumulate(ides.begin(), ides.end(), 0);
  s.inv = inversions(sigma);
  return s;
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> w(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) w[static_cast<std::size_t>(sigma(i) - 1)] = i;
  return Permutation(std::move(w));
}

Permutation reverse_rho(const Permutation& sigma) { return Permutation(reversed(sigma.word())); }

Permutation complement(const Permutation& sigma) { return Permutation(complemented(sigma.word())); }

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::p123: return "123";
    case Pattern::p132: return "132";
    case Pattern::p213: return "213";
    case Pattern::p231: return "231";
    case Pattern::p312: return "312";
    case Pattern::p321: return "321";
  }
  return "?";
}

Permutation pattern_permutation(Pattern p) { return parse_permutation(pattern_name(p)); }

std::optional<Pattern> as_s3_pattern(const Permutation& tau) {
  for (Pattern p : kAllPatterns) {
    if (pattern_permutation(p) == tau) return p;
  }
  return std::nullopt;
}

Pattern parse_pattern(std::string_view text) {
  for (Pattern p : kAllPatterns) {
    if (pattern_name(p) == text) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pattern '" + std::string(text) + "'");
}

bool avoids_naive(const Permutation& sigma, const Permutation& tau) {
  const int n = sigma.size();
  const int k = tau.size();
  if (k > n) return true;
  // Walk all k-subsets of positions via a selection mask.
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  std::vector<int> sub(static_cast<std::size_t>(k));
  do {
    std::size_t c = 0;
    for (int i = 0; i < n; ++i) {
      if (mask[static_cast<std::size_t>(i)]) sub[c++] = sigma(i + 1);
    }
    bool same_order = true;
    for (int a = 0; a < k && same_order; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if ((sub[static_cast<std::size_t>(a)] < sub[static_cast<std::size_t>(b)]) != (tau(a + 1) < tau(b + 1))) {
          same_order = false;
          break;
        }
      }
    }
    if (same_order) return false;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return true;
}

bool avoids(const Permutation& sigma, Pattern tau) {
  const auto& w = sigma.word();
  switch (tau) {
    case Pattern::p231: return stack_sortable(w);
    case Pattern::p132: return stack_sortable(reversed(w));
    case Pattern::p213: return stack_sortable(complemented(w));
    case Pattern::p312: return stack_sortable(reversed(complemented(w)));
    case Pattern::p123: return !has_increasing_triple(w);
    case Pattern::p321: return !has_increasing_triple(reversed(w));
  }
  return false;
}

bool avoids(const Permutation& sigma, const Permutation& tau) {
  if (auto p = as_s3_pattern(tau)) return avoids(sigma, *p);
  return avoids_naive(sigma, tau);
}

void for_each_avoider(int n, const Permutation& tau, const std::function<void(const Permutation&)>& visit,
                      const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  check_limit(n, limits);
  const std::vector<int>& pattern = tau.word();
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  std::function<void()> extend = [&]() {
    if (static_cast<int>(prefix.size()) == n) {
      visit(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      prefix.push_back(v);
      // Containment is inherited by every extension, so only occurrences
      // ending at the new entry need checking.
      if (!occurrence_ending_at(prefix, prefix.size() - 1, pattern)) {
        used[static_cast<std::size_t>(v)] = true;
        extend();
        used[static_cast<std::size_t>(v)] = false;
      }
      prefix.pop_back();
    }
  };
  extend();
}

std::vector<Permutation> enumerate_avoiders(int n, const Permutation& tau, const Limits& limits) {
  std::vector<Permutation> out;
  for_each_avoider(n, tau, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

std::vector<Permutation> enumerate_avoiders(int n, Pattern tau, const Limits& limits) {
  return enumerate_avoiders(n, pattern_permutation(tau), limits);
}

std::vector<Permutation> enumerate_permutations(int n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  check_limit(n, limits);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int tau_offset(const Permutation& sigma, int j) {
  const int n = sigma.size();
  auto is_ascent = [&](int i) { return i == n || (i >= 1 && i < n && sigma(i) < sigma(i + 1)); };
  if (j < 1 || j > n || !is_ascent(j)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(j) + " is not an ascent of " + sigma.to_string());
  }
  int previous = 0;
  for (int i = j - 1; i >= 1; --i) {
    if (is_ascent(i)) {
      previous = i;
      break;
    }
  }
  return j - 1 - previous;
}

Permutation reconstruct_231(int n, const IndexSet& des, const IndexSet& ides) {
  if (n < 1) throw Error(ErrorCode::InvalidDescentData, "n must be positive");
  if (!is_strictly_increasing_in(des, 1, n - 1) || !is_strictly_increasing_in(ides, 1, n - 1)) {
    throw Error(ErrorCode::InvalidDescentData, "descent sets must be strictly increasing subsets of [n-1]");
  }
  if (des.size() != ides.size()) {
    throw Error(ErrorCode::InvalidDescentData, "|Des| != |iDes|");
  }
  for (std::size_t l = 0; l < des.size(); ++l) {
    if (des[l] > ides[l]) {
      throw Error(ErrorCode::InvalidDescentData,
                  "elementwise condition fails at index " + std::to_string(l + 1) + ": " + std::to_string(des[l]) +
                      " > " + std::to_string(ides[l]));
    }
  }

  const auto un = static_cast<std::size_t>(n);
  std::vector<bool> is_descent(un + 1, false);
  for (int i : des) is_descent[static_cast<std::size_t>(i)] = true;
  // Values taken by descents are {i'+1 : i' in iDes}; the rest go to ascents
  // in increasing order.
  std::vector<bool> descent_value(un + 1, false);
  for (int i : ides) descent_value[static_cast<std::size_t>(i + 1)] = true;

  std::vector<int> word(un + 1, 0);
  std::vector<bool> assigned(un + 2, false);
  int next_value = 1;
  for (int pos = 1; pos <= n; ++pos) {
    if (is_descent[static_cast<std::size_t>(pos)]) continue;
    while (descent_value[static_cast<std::size_t>(next_value)]) ++next_value;
    word[static_cast<std::size_t>(pos)] = next_value;
    assigned[static_cast<std::size_t>(next_value)] = true;
    ++next_value;
  }
  // Descents right to left: smallest unassigned value above the right neighbour.
  for (int pos = n - 1; pos >= 1; --pos) {
    if (!is_descent[static_cast<std::size_t>(pos)]) continue;
    int v = word[static_cast<std::size_t>(pos + 1)] + 1;
    while (v <= n && assigned[static_cast<std::size_t>(v)]) ++v;
    if (v > n) throw Error(ErrorCode::Internal, "reconstruction ran out of values");
    word[static_cast<std::size_t>(pos)] = v;
    assigned[static_cast<std::size_t>(v)] = true;
  }
  Permutation sigma(std::vector<int>(word.begin() + 1, word.end()));
  if (descent_set(sigma) != des || descent_set(inverse(sigma)) != ides) {
    throw Error(ErrorCode::Internal, "reconstruction of " + sigma.to_string() + " does not reproduce its descent data");
  }
  return sigma;
}

}  // namespace qtcat
