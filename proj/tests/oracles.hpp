#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library, so an agreement is a genuine cross-check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<int> descents(const Word& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i + 1));
  }
  return d;
}

inline Word inverse(const Word& w) {
  Word inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i + 1);
  return inv;
}

inline int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

inline int maj(const Word& w) { return sum(descents(w)); }
inline int imaj(const Word& w) { return maj(inverse(w)); }

inline int inversions(const Word& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  }
  return c;
}

/// Brute-force pattern containment for patterns of length 3.
inline bool contains3(const Word& w, const Word& p) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const int a = w[i], b = w[j], c = w[k];
        auto rank = [&](int x) { return (x > a) + (x > b) + (x > c) + 1; };
        if (rank(a) == p[0] && rank(b) == p[1] && rank(c) == p[2]) return true;
      }
    }
  }
  return false;
}

inline std::vector<Word> all_perms(int n) {
  Word w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<Word> avoiders3(int n, const Word& p) {
  std::vector<Word> out;
  for (auto& w : all_perms(n)) {
    if (!contains3(w, p)) out.push_back(w);
  }
  return out;
}

/// All 0/1 words with n zeros whose prefixes never have more 1's than 0's.
inline std::vector<std::string> dyck_words(int n) {
  std::vector<std::string> out;
  const int len = 2 * n;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    std::string w;
    int h = 0;
    bool ok = true;
    for (int i = len - 1; i >= 0; --i) {
      const bool east = (mask >> i) & 1u;
      w += east ? '1' : '0';
      h += east ? -1 : 1;
      if (h < 0) ok = false;
    }
    if (ok && h == 0) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// h[x] = height at which the east step leaving column x is taken.
inline std::vector<int> column_heights(const std::string& w) {
  std::vector<int> h;
  int north = 0;
  for (char c : w) {
    if (c == '0') {
      ++north;
    } else {
      h.push_back(north);
    }
  }
  return h;
}

/// Unit cells [x,x+1]x[y,y+1] with y >= x+1 lying under the path.
inline int area(const std::string& w) {
  const auto h = column_heights(w);
  int cells = 0;
  for (std::size_t x = 0; x < h.size(); ++x) {
    for (int y = static_cast<int>(x) + 1; y < h[x]; ++y) ++cells;
  }
  return cells;
}

/// Walks the bounce path point by point.
inline int bounce(const std::string& w) {
  const auto h = column_heights(w);
  const int n = static_cast<int>(h.size());
  int x = 0, y = 0, total = 0;
  while (x < n) {
    while (y < h[static_cast<std::size_t>(x)]) ++y;  // north until D turns east here
    while (x < y) ++x;                               // east back to the diagonal
    if (x < n) total += n - x;
  }
  return total;
}

/// Valley coordinates after each "10" factor.
inline std::pair<std::vector<int>, std::vector<int>> valleys(const std::string& w) {
  std::vector<int> xs, ys;
  int x = 0, y = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '0') {
      ++y;
    } else {
      ++x;
      if (i + 1 < w.size() && w[i + 1] == '0') {
        xs.push_back(x);
        ys.push_back(y);
      }
    }
  }
  return {xs, ys};
}

/// maj, maj0, maj1 of a path word.
inline std::tuple<int, int, int> path_majors(const std::string& w) {
  int maj = 0, maj0 = 0, maj1 = 0, zeros = 0, ones = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    (w[i] == '0' ? zeros : ones) += 1;
    if (w[i] == '1' && i + 1 < w.size() && w[i + 1] == '0') {
      maj += static_cast<int>(i + 1);
      maj0 += zeros;
      maj1 += ones;
    }
  }
  return {maj, maj0, maj1};
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

/// Gaussian binomial evaluated at an integer q by the product formula.
inline long long q_binomial_at(int k, int l, long long q) {
  auto qpow = [q](int e) {
    __int128 r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  // After step i the value is [k-l+i choose i]_q, an integer.
  __int128 r = 1;
  for (int i = 1; i <= l; ++i) r = r * (qpow(k - l + i) - 1) / (qpow(i) - 1);
  return static_cast<long long>(r);
}

/// Polynomial in (q,t) as an exponent -> coefficient map.
using QtPoly = std::map<std::pair<int, int>, long long>;

/// Random permutation of size n.
inline Word random_perm(int n, std::mt19937& rng) {
  Word w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace oracle
