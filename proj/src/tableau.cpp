#include "qtcat/tableau.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "qtcat/bijections.hpp"

namespace qtcat {

namespace {

using Grid = std::vector<std::vector<int>>;

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidTableau, why); }

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) n_ += static_cast<int>(row.size());
  if (n_ == 0) invalid("tableau must have at least one cell");
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) invalid("empty row " + std::to_string(r));
    if (r > 0 && row.size() > rows_[r - 1].size()) invalid("row lengths must weakly decrease");
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int x = row[c];
      if (x < 1 || x > n_ || seen[static_cast<std::size_t>(x)]) invalid("entries must be exactly 1..n");
      seen[static_cast<std::size_t>(x)] = true;
      if (c > 0 && row[c - 1] >= x) invalid("rows must increase");
      if (r > 0 && rows_[r - 1][c] >= x) invalid("columns must increase");
    }
  }
}

std::vector<int> StandardTableau::shape() const {
  std::vector<int> lambda;
  lambda.reserve(rows_.size());
  for (const auto& row : rows_) lambda.push_back(static_cast<int>(row.size()));
  return lambda;
}

int StandardTableau::row_of(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (std::find(rows_[r].begin(), rows_[r].end(), entry) != rows_[r].end()) return static_cast<int>(r);
  }
  return -1;
}

RskPair rsk(const Permutation& sigma) {
  Grid p;
  Grid q;
  for (int k = 1; k <= sigma.size(); ++k) {
    int x = sigma(k);
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({k});
        break;
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(k);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

Permutation inverse_rsk(const StandardTableau& insertion, const StandardTableau& recording) {
  if (insertion.shape() != recording.shape()) {
    throw Error(ErrorCode::InvalidTableau, "insertion and recording tableaux have different shapes");
  }
  Grid p = insertion.rows();
  Grid q = recording.rows();
  const int n = insertion.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    // k is the largest entry of q, hence sits at the end of its row.
    std::size_t r = 0;
    while (q[r].back() != k) ++r;
    q[r].pop_back();
    int y = p[r].back();
    p[r].pop_back();
    if (p[r].empty()) {
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(r));
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(r));
    }
    while (r-- > 0) {
      auto& row = p[r];
      auto it = std::lower_bound(row.begin(), row.end(), y);
      --it;  // largest entry smaller than y
      std::swap(y, *it);
    }
    word[static_cast<std::size_t>(k - 1)] = y;
  }
  return Permutation(std::move(word));
}

IndexSet tableau_descents(const StandardTableau& t) {
  std::vector<int> row(static_cast<std::size_t>(t.size()) + 1);
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (int x : t.rows()[r]) row[static_cast<std::size_t>(x)] = static_cast<int>(r);
  }
  IndexSet des;
  for (int i = 1; i < t.size(); ++i) {
    if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) des.push_back(i);
  }
  return des;
}

StandardTableau evacuation(const StandardTableau& t) {
  const int n = t.size();
  Grid work = t.rows();
  Grid result;
  for (const auto& row : work) result.emplace_back(row.size(), 0);

  for (int k = 1; k <= n; ++k) {
    std::size_t r = 0;
    std::size_t c = 0;
    while (true) {
      const bool has_right = c + 1 < work[r].size();
      const bool has_below = r + 1 < work.size() && c < work[r + 1].size();
      if (!has_right && !has_below) break;
      if (has_right && (!has_below || work[r][c + 1] < work[r + 1][c])) {
        work[r][c] = work[r][c + 1];
        ++c;
      } else {
        work[r][c] = work[r + 1][c];
        ++r;
      }
    }
    work[r].pop_back();
    if (work[r].empty()) work.pop_back();
    result[r][c] = n + 1 - k;
  }
  return StandardTableau(std::move(result));
}

Permutation j_involution(const Permutation& sigma) {
  require_avoids(sigma, Pattern::p321);
  const RskPair pq = rsk(sigma);
  try {
    return inverse_rsk(evacuation(pq.insertion), pq.recording);
  } catch (const Error& e) {
    throw Error(ErrorCode::Internal, std::string("inverse RSK failed: ") + e.what());
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  if (n >= 1) build(n, n);
  return out;
}

std::vector<StandardTableau> enumerate_syt(const std::vector<int>& shape) {
  int n = 0;
  for (int len : shape) n += len;
  std::vector<StandardTableau> out;
  Grid rows(shape.size());
  // Place 1..n in turn; entry k may go at the end of any row that still has
  // room and is strictly shorter than the row above.
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const auto len = rows[r].size();
      if (static_cast<int>(len) >= shape[r]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(k);
      place(k + 1);
      rows[r].pop_back();
    }
  };
  if (n >= 1) place(1);
  return out;
}

std::vector<StandardTableau> enumerate_syt(int n) {
  std::vector<StandardTableau> out;
  for (const auto& lambda : partitions(n)) {
    auto part = enumerate_syt(lambda);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace qtcat
