#include "qtcat/kd_search.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qtcat/generating.hpp"

namespace qtcat {

namespace {

struct Target {
  int q = 0;
  int t = 0;
  int capacity = 0;
};

struct Instance {
  int n = 0;
  int c2 = 0;
  std::vector<DyckPath> paths;
  std::vector<int> maj0;
  std::vector<int> maj1;
  std::vector<Target> targets;
  /// adjacency[p]: indices into targets that path p may take.
  std::vector<std::vector<int>> adjacency;
};

Instance build_instance(int n, const Limits& limits) {
  Instance inst;
  inst.n = n;
  inst.c2 = choose2(n);
  inst.paths = enumerate_dyck(n, limits);
  for (const auto& d : inst.paths) {
    const PathStats st = path_stats(d);
    inst.maj0.push_back(st.maj0);
    inst.maj1.push_back(st.maj1);
  }
  const MultiPoly cat = cat_qt(n, limits);
  // Edges only join equal values of x - y, so bucket targets by that key.
  std::map<int, std::vector<int>> by_difference;
  for (const auto& [e, c] : cat.terms()) {
    by_difference[e.q - e.t].push_back(static_cast<int>(inst.targets.size()));
    inst.targets.push_back({e.q, e.t, static_cast<int>(c)});
  }
  inst.adjacency.resize(inst.paths.size());
  for (std::size_t p = 0; p < inst.paths.size(); ++p) {
    const int key = inst.maj1[p] - (inst.c2 - inst.maj0[p]);
    auto it = by_difference.find(key);
    if (it == by_difference.end()) continue;
    for (int m : it->second) {
      const Target& tg = inst.targets[static_cast<std::size_t>(m)];
      const int k = inst.maj1[p] - tg.q;
      if (k >= 0 && k == inst.c2 - inst.maj0[p] - tg.t) inst.adjacency[p].push_back(m);
    }
  }
  return inst;
}

Coefficient binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Coefficient r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Coefficient nested_count(const Instance& inst) {
  // Group by maj = maj0 + maj1; within a group, compatibility is x <= maj1.
  std::map<int, std::vector<int>> path_maj1_by_class;
  for (std::size_t p = 0; p < inst.paths.size(); ++p) {
    path_maj1_by_class[inst.maj0[p] + inst.maj1[p]].push_back(inst.maj1[p]);
  }
  std::map<int, std::vector<Target>> targets_by_class;
  for (const Target& tg : inst.targets) targets_by_class[tg.q - tg.t + inst.c2].push_back(tg);

  Coefficient total = 1;
  std::size_t covered = 0;
  for (auto& [cls, targets] : targets_by_class) {
    auto it = path_maj1_by_class.find(cls);
    if (it == path_maj1_by_class.end()) return 0;
    std::vector<int>& pool = it->second;
    std::sort(targets.begin(), targets.end(), [](const Target& a, const Target& b) { return a.q > b.q; });
    long long used = 0;
    int demand = 0;
    for (const Target& tg : targets) {
      const long long eligible = std::count_if(pool.begin(), pool.end(), [&](int m1) { return m1 >= tg.q; });
      total *= binomial(eligible - used, tg.capacity);
      used += tg.capacity;
      demand += tg.capacity;
    }
    if (demand != static_cast<int>(pool.size())) return 0;
    covered += pool.size();
  }
  if (covered != inst.paths.size()) return 0;
  return total;
}

std::vector<int> augmenting_matching(const Instance& inst) {
  const std::size_t paths = inst.paths.size();
  std::vector<std::vector<int>> holders(inst.targets.size());
  std::vector<int> match_of(paths, -1);
  std::vector<char> visited;

  std::function<bool(int)> augment = [&](int p) -> bool {
    for (int m : inst.adjacency[static_cast<std::size_t>(p)]) {
      auto um = static_cast<std::size_t>(m);
      if (visited[um]) continue;
      visited[um] = 1;
      auto& held = holders[um];
      if (static_cast<int>(held.size()) < inst.targets[um].capacity) {
        held.push_back(p);
        match_of[static_cast<std::size_t>(p)] = m;
        return true;
      }
      for (int& other : held) {
        if (augment(other)) {
          other = p;
          match_of[static_cast<std::size_t>(p)] = m;
          return true;
        }
      }
    }
    return false;
  };

  for (std::size_t p = 0; p < paths; ++p) {
    visited.assign(inst.targets.size(), 0);
    if (!augment(static_cast<int>(p))) return {};
  }
  std::vector<int> k(paths);
  for (std::size_t p = 0; p < paths; ++p) {
    k[p] = inst.maj1[p] - inst.targets[static_cast<std::size_t>(match_of[p])].q;
  }
  return k;
}

}  // namespace

Coefficient kd_assignment_count(int n, const Limits& limits) { return nested_count(build_instance(n, limits)); }

std::vector<int> kd_find_one(int n, const Limits& limits) { return augmenting_matching(build_instance(n, limits)); }

bool kd_assignment_valid(int n, const std::vector<int>& k, const Limits& limits) {
  const auto paths = enumerate_dyck(n, limits);
  if (k.size() != paths.size()) return false;
  const int c2 = choose2(n);
  MultiPoly sum;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const PathStats st = path_stats(paths[i]);
    const int x = st.maj1 - k[i];
    const int y = c2 - st.maj0 - k[i];
    if (k[i] < 0 || x < 0 || y < 0) return false;
    sum += MultiPoly::monomial({0, x, y});
  }
  return sum == cat_qt(n, limits);
}

KdSearchResult kd_search(int n, const KdOptions& options) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const Instance inst = build_instance(n, options.limits);
  KdSearchResult result;
  result.n = n;
  result.paths = inst.paths;
  result.count = nested_count(inst);

  if (n > options.full_enumeration_max_n) {
    std::vector<int> k = augmenting_matching(inst);
    if (k.empty()) throw Error(ErrorCode::NoAssignment, "no shift assignment exists for n=" + std::to_string(n));
    result.assignments.push_back(std::move(k));
    result.complete = result.count == 1;
    return result;
  }

  std::vector<int> remaining(inst.targets.size());
  for (std::size_t m = 0; m < inst.targets.size(); ++m) remaining[m] = inst.targets[m].capacity;
  std::vector<int> k(inst.paths.size(), 0);
  bool capped = false;
  std::function<void(std::size_t)> assign = [&](std::size_t p) {
    if (capped) return;
    if (p == inst.paths.size()) {
      if (result.assignments.size() >= options.max_assignments) {
        capped = true;
        return;
      }
      result.assignments.push_back(k);
      return;
    }
    for (int m : inst.adjacency[p]) {
      auto um = static_cast<std::size_t>(m);
      if (remaining[um] == 0) continue;
      --remaining[um];
      k[p] = inst.maj1[p] - inst.targets[um].q;
      assign(p + 1);
      ++remaining[um];
    }
  };
  assign(0);
  if (result.assignments.empty()) {
    throw Error(ErrorCode::NoAssignment, "no shift assignment exists for n=" + std::to_string(n));
  }
  std::sort(result.assignments.begin(), result.assignments.end());
  result.complete = !capped;
  return result;
}

}  // namespace qtcat
