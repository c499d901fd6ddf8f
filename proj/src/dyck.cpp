#include "qtcat/dyck.hpp"

#include <cctype>
#include <functional>
#include <numeric>

namespace qtcat {

namespace {

bool strictly_increasing_in(const IndexSet& s, int lo, int hi) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < lo || s[k] > hi) return false;
    if (k > 0 && s[k - 1] >= s[k]) return false;
  }
  return true;
}

// Throws on the first defect found while scanning left to right; a prefix
// violation is reported before the final count check.
void validate_word(const std::string& word) {
  if (word.empty()) throw Error(ErrorCode::EmptyInput, "empty Dyck word");
  int height = 0;
  int norths = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::NonBinaryCharacter, std::string("unexpected character '") + c + "'");
    }
    if (c == '0') {
      ++height;
      ++norths;
    } else if (--height < 0) {
      throw Error(ErrorCode::PrefixViolation,
                  "prefix of length " + std::to_string(i + 1) + " has more 1's than 0's in '" + word + "'");
    }
  }
  if (height != 0) {
    throw Error(ErrorCode::UnbalancedCounts, "'" + word + "' has " + std::to_string(norths) + " 0's and " +
                                                 std::to_string(static_cast<int>(word.size()) - norths) + " 1's");
  }
}

}  // namespace

DyckPath::DyckPath(std::string word) : word_(std::move(word)) { validate_word(word_); }

DyckPath parse_path(std::string_view text) {
  std::string word;
  word.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) word += c;
  }
  return DyckPath(std::move(word));
}

bool is_valid(const ValleySet& v) {
  if (v.n < 1 || v.xs.size() != v.ys.size()) return false;
  if (!strictly_increasing_in(v.xs, 1, v.n - 1) || !strictly_increasing_in(v.ys, 1, v.n - 1)) return false;
  for (std::size_t l = 0; l < v.xs.size(); ++l) {
    if (v.xs[l] > v.ys[l]) return false;
  }
  return true;
}

PathStats path_stats(const DyckPath& d) {
  PathStats s;
  int zeros = 0;
  int ones = 0;
  for (int i = 1; i < d.length(); ++i) {
    if (d.step(i) == 0) {
      ++zeros;
    } else {
      ++ones;
    }
    if (d.step(i) == 1 && d.step(i + 1) == 0) {
      s.des.push_back(i);
      s.maj += i;
      s.maj0 += zeros;
      s.maj1 += ones;
    }
  }
  return s;
}

ValleySet valleys(const DyckPath& d) {
  ValleySet v;
  v.n = d.semilength();
  int x = 0;
  int y = 0;
  for (int i = 1; i < d.length(); ++i) {
    if (d.step(i) == 0) {
      ++y;
    } else {
      ++x;
      if (d.step(i + 1) == 0) {
        v.xs.push_back(x);
        v.ys.push_back(y);
      }
    }
  }
  return v;
}

DyckPath from_valleys(const ValleySet& v) {
  if (!is_valid(v)) {
    throw Error(ErrorCode::InvalidValleySet, "valley coordinates do not describe a Dyck path of semilength " +
                                                 std::to_string(v.n));
  }
  std::string word;
  word.reserve(static_cast<std::size_t>(2 * v.n));
  int x = 0;
  int y = 0;
  for (std::size_t l = 0; l <= v.xs.size(); ++l) {
    const int next_y = l < v.ys.size() ? v.ys[l] : v.n;
    const int next_x = l < v.xs.size() ? v.xs[l] : v.n;
    word.append(static_cast<std::size_t>(next_y - y), '0');
    word.append(static_cast<std::size_t>(next_x - x), '1');
    x = next_x;
    y = next_y;
  }
  return DyckPath(std::move(word));
}

int area(const DyckPath& d) {
  int total = 0;
  int norths = 0;
  int easts = 0;
  for (int i = 1; i <= d.length(); ++i) {
    if (d.step(i) == 0) {
      total += norths - easts;  // (k-1) - e_k for the k-th north step
      ++norths;
    } else {
      ++easts;
    }
  }
  return total;
}

std::vector<int> bounce_touches(const DyckPath& d) {
  const int n = d.semilength();
  // start_height[e]: y-coordinate where the (e+1)-th east step begins.
  std::vector<int> start_height;
  start_height.reserve(static_cast<std::size_t>(n));
  int norths = 0;
  for (int i = 1; i <= d.length(); ++i) {
    if (d.step(i) == 0) {
      ++norths;
    } else {
      start_height.push_back(norths);
    }
  }
  std::vector<int> touches;
  int a = 0;
  while (true) {
    a = start_height[static_cast<std::size_t>(a)];
    if (a >= n) break;
    touches.push_back(a);
  }
  return touches;
}

int bounce(const DyckPath& d) {
  const int n = d.semilength();
  int total = 0;
  for (int a : bounce_touches(d)) total += n - a;
  return total;
}

DyckPath psi_complement(const DyckPath& d) {
  const ValleySet v = valleys(d);
  ValleySet out;
  out.n = v.n;
  out.xs = complement_in_range(v.ys, v.n);
  out.ys = complement_in_range(v.xs, v.n);
  return from_valleys(out);
}

DyckPath reflect(const DyckPath& d) {
  const ValleySet v = valleys(d);
  ValleySet out;
  out.n = v.n;
  for (std::size_t l = v.xs.size(); l-- > 0;) {
    out.xs.push_back(v.n - v.ys[l]);
    out.ys.push_back(v.n - v.xs[l]);
  }
  return from_valleys(out);
}

std::vector<DyckPath> enumerate_dyck(int n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  check_limit(n, limits);
  std::vector<DyckPath> out;
  std::string word;
  word.reserve(static_cast<std::size_t>(2 * n));
  std::function<void(int, int)> extend = [&](int norths, int easts) {
    if (easts == n) {
      out.emplace_back(word);
      return;
    }
    if (norths < n) {
      word.push_back('0');
      extend(norths + 1, easts);
      word.pop_back();
    }
    if (easts < norths) {
      word.push_back('1');
      extend(norths, easts + 1);
      word.pop_back();
    }
  };
  extend(0, 0);
  return out;
}

}  // namespace qtcat
