#include "qtcat/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "qtcat/bijections.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/generating.hpp"
#include "qtcat/kd_search.hpp"
#include "qtcat/permutation.hpp"
#include "qtcat/tableau.hpp"

namespace qtcat {

namespace {

std::string show(const Permutation& s) { return s.to_string(); }
std::string show(const DyckPath& d) { return d.word(); }
std::string show(const StandardTableau& t) {
  std::string out = "[";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(t.rows()[r][c]);
    }
    out += ']';
  }
  return out + "]";
}

IndexSet sorted_unique(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int sum(const IndexSet& s) { return std::accumulate(s.begin(), s.end(), 0); }

class Runner {
public:
  Runner(std::string suite, const VerifyOptions& options) : suite_(std::move(suite)), options_(options) {}

  std::vector<CheckResult> take() { return std::move(results_); }

  /// Scans items_for(n) for n in [lo, hi] and records the first violation.
  template <class T>
  void scan(const std::string& name, int lo, int hi, const std::function<std::vector<T>(int)>& items_for,
            const std::function<bool(const T&)>& holds) {
    std::size_t total = 0;
    for (int n = lo; n <= hi; ++n) {
      const std::vector<T> items = items_for(n);
      total += items.size();
      auto bad = kernels::find_first_violation(std::span<const T>(items), holds, options_.backend);
      if (bad) {
        record(name, false, "fails at n=" + std::to_string(n), show(items[*bad]));
        return;
      }
    }
    record(name, true, range(lo, hi) + ", " + std::to_string(total) + " objects", "");
  }

  void record(const std::string& name, bool passed, std::string detail, std::string counterexample) {
    results_.push_back({suite_, name, passed, std::move(detail), std::move(counterexample)});
  }

  /// Per-n boolean check without object-level counterexamples.
  void per_n(const std::string& name, int lo, int hi, const std::function<bool(int)>& holds) {
    for (int n = lo; n <= hi; ++n) {
      bool ok = false;
      try {
        ok = holds(n);
      } catch (const Error& e) {
        record(name, false, "n=" + std::to_string(n) + ": " + e.what(), "n=" + std::to_string(n));
        return;
      }
      if (!ok) {
        record(name, false, "fails at n=" + std::to_string(n), "n=" + std::to_string(n));
        return;
      }
    }
    record(name, true, range(lo, hi), "");
  }

  const Limits& limits() const { return options_.limits; }
  kernels::Backend backend() const { return options_.backend; }

private:
  static std::string range(int lo, int hi) {
    return lo == hi ? "n=" + std::to_string(lo) : "n=" + std::to_string(lo) + ".." + std::to_string(hi);
  }

  std::string suite_;
  VerifyOptions options_;
  std::vector<CheckResult> results_;
};

std::function<std::vector<Permutation>(int)> avoiders_of(Pattern p, const Limits& limits) {
  return [p, limits](int n) { return enumerate_avoiders(n, p, limits); };
}

std::function<std::vector<Permutation>(int)> all_perms(const Limits& limits) {
  return [limits](int n) { return enumerate_permutations(n, limits); };
}

std::function<std::vector<DyckPath>(int)> all_paths(const Limits& limits) {
  return [limits](int n) { return enumerate_dyck(n, limits); };
}

// Exhaustive S_n up to kExhaustiveSymmetricMax, fixed-seed samples above.
std::function<std::vector<Permutation>(int)> perms_or_samples(const Limits& limits, int samples) {
  return [limits, samples](int n) {
    if (n <= kExhaustiveSymmetricMax) return enumerate_permutations(n, limits);
    check_limit(n, limits);
    std::mt19937 rng(static_cast<unsigned>(1000 + n));
    std::vector<Permutation> out;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int s = 0; s < samples; ++s) {
      std::iota(w.begin(), w.end(), 1);
      std::shuffle(w.begin(), w.end(), rng);
      out.emplace_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
}

void suite_phi(Runner& r, int n_max) {
  const auto avoiders = avoiders_of(Pattern::p231, r.limits());
  r.per_n("phi is a bijection S_n(231) -> D_n (count = Cat_n)", 1, n_max, [&](int n) {
    const auto perms = avoiders(n);
    auto images = kernels::transform(std::span<const Permutation>(perms), phi_unchecked, r.backend());
    std::sort(images.begin(), images.end());
    return static_cast<long long>(perms.size()) == catalan_number(n) && images == enumerate_dyck(n, r.limits());
  });
  r.scan<Permutation>("phi_inv(phi(s)) = s", 1, n_max, avoiders,
                      [](const Permutation& s) { return phi_inv(phi_unchecked(s)) == s; });
  r.scan<DyckPath>("phi(phi_inv(D)) = D", 1, n_max, all_paths(r.limits()),
                   [](const DyckPath& d) { return phi(phi_inv(d)) == d; });
  r.scan<Permutation>("(Set_X, Set_Y)(phi s) = (Des, iDes)(s)", 1, n_max, avoiders, [](const Permutation& s) {
    const ValleySet v = valleys(phi_unchecked(s));
    const DescentData dd = descent_data(s);
    return v.xs == dd.des && v.ys == dd.ides;
  });
  r.scan<Permutation>("maj(phi s) = maj(s) + imaj(s)", 1, n_max, avoiders, [](const Permutation& s) {
    const PermStats ps = perm_stats(s);
    return path_stats(phi_unchecked(s)).maj == ps.maj + ps.imaj;
  });
  r.scan<Permutation>("maj1(phi s) = maj(s), maj0(phi s) = imaj(s)", 1, n_max, avoiders, [](const Permutation& s) {
    const PermStats ps = perm_stats(s);
    const PathStats ds = path_stats(phi_unchecked(s));
    return ds.maj1 == ps.maj && ds.maj0 == ps.imaj;
  });
}

void suite_lemmas(Runner& r, int n_max) {
  const Limits& lim = r.limits();
  const auto avoiders = avoiders_of(Pattern::p231, lim);
  const int sym_max = std::min(n_max, kExhaustiveSymmetricMax);

  r.scan<Permutation>("iDes(s) = {s_i - 1 : i in Des(s)} on S_n(231)", 1, n_max, avoiders, [](const Permutation& s) {
    IndexSet shifted;
    for (int i : descent_set(s)) shifted.push_back(s(i) - 1);
    return sorted_unique(shifted) == descent_set(inverse(s));
  });
  for (Pattern p : {Pattern::p132, Pattern::p231, Pattern::p312, Pattern::p213}) {
    r.scan<Permutation>("des(s) = des(s^-1) on S_n(" + std::string(pattern_name(p)) + ")", 1, n_max,
                        avoiders_of(p, lim), [](const Permutation& s) {
                          return descent_set(s).size() == descent_set(inverse(s)).size();
                        });
  }
  {
    const Permutation w({2, 4, 1, 3});
    const bool ok = avoids(w, Pattern::p123) && descent_set(w) == IndexSet{2} && descent_set(inverse(w)) == IndexSet{1, 3};
    r.record("123-avoiding witness [2,4,1,3] has |Des| != |iDes|", ok, ok ? "Des={2}, iDes={1,3}" : "mismatch",
             ok ? "" : show(w));
  }
  r.scan<Permutation>("ascent j, k > j => s_k > s_j on S_n(231)", 1, n_max, avoiders, [](const Permutation& s) {
    for (int j : descent_data(s).asc) {
      for (int k = j + 1; k <= s.size(); ++k) {
        if (s(k) <= s(j)) return false;
      }
    }
    return true;
  });
  r.scan<Permutation>("j >= s_j + tau_offset(j) for every ascent", 1, n_max, avoiders, [](const Permutation& s) {
    for (int j : descent_data(s).asc) {
      if (j < s(j) + tau_offset(s, j)) return false;
    }
    return true;
  });
  r.scan<Permutation>("consecutive ascents j_l >= s(j_{l+1}) - 1", 1, n_max, avoiders, [](const Permutation& s) {
    const IndexSet asc = descent_data(s).asc;
    for (std::size_t l = 0; l + 1 < asc.size(); ++l) {
      if (asc[l] < s(asc[l + 1]) - 1) return false;
    }
    return true;
  });
  r.scan<Permutation>("sorted Des <= iDes elementwise", 1, n_max, avoiders, [](const Permutation& s) {
    const IndexSet des = descent_set(s);
    const IndexSet ides = descent_set(inverse(s));
    if (des.size() != ides.size()) return false;
    for (std::size_t l = 0; l < des.size(); ++l) {
      if (des[l] > ides[l]) return false;
    }
    return true;
  });
  r.scan<Permutation>("reconstruct_231(n, Des, iDes) = s", 1, n_max, avoiders, [](const Permutation& s) {
    return reconstruct_231(s.size(), descent_set(s), descent_set(inverse(s))) == s;
  });
  r.scan<Permutation>("Des/iDes of rho(s) follow the reversal formulas", 1, n_max, perms_or_samples(lim, 200),
                      [](const Permutation& s) {
                        const int n = s.size();
                        IndexSet reflected;
                        for (int i : descent_set(s)) reflected.push_back(n - i);
                        const Permutation rs = reverse_rho(s);
                        return descent_set(rs) == complement_in_range(sorted_unique(reflected), n) &&
                               descent_set(inverse(rs)) == complement_in_range(descent_set(inverse(s)), n);
                      });
  r.scan<Permutation>("inverse and rho are involutions; inverse swaps maj and imaj", 1, sym_max, all_perms(lim),
                      [](const Permutation& s) {
                        const PermStats a = perm_stats(s);
                        const PermStats b = perm_stats(inverse(s));
                        return inverse(inverse(s)) == s && reverse_rho(reverse_rho(s)) == s && a.maj == b.imaj &&
                               a.imaj == b.maj;
                      });
  r.scan<Permutation>("linear pattern recognizers agree with the naive scan", 1, std::min(n_max, 7), all_perms(lim),
                      [](const Permutation& s) {
                        for (Pattern p : kAllPatterns) {
                          if (avoids(s, p) != avoids_naive(s, pattern_permutation(p))) return false;
                        }
                        return true;
                      });
  r.scan<Permutation>("h_{i+1} < h_i iff i is an ascent; 132-avoidance iff h_{i+1} >= h_i - 1", 1,
                      std::min(n_max, 7), all_perms(lim), [](const Permutation& s) {
                        const auto h = heights(s);
                        for (int i = 1; i < s.size(); ++i) {
                          const bool ascent = s(i) < s(i + 1);
                          if ((h[static_cast<std::size_t>(i)] < h[static_cast<std::size_t>(i - 1)]) != ascent) return false;
                        }
                        return avoids_132_by_heights(h) == avoids(s, Pattern::p132);
                      });

  const auto paths = all_paths(lim);
  r.scan<DyckPath>("maj(D) = sum Set_X + sum Set_Y", 1, n_max, paths, [](const DyckPath& d) {
    const ValleySet v = valleys(d);
    return path_stats(d).maj == sum(v.xs) + sum(v.ys);
  });
  r.scan<DyckPath>("from_valleys(valleys(D)) = D", 1, n_max, paths,
                   [](const DyckPath& d) { return from_valleys(valleys(d)) == d; });
  r.scan<DyckPath>("maj0 + maj1 = maj", 1, n_max, paths, [](const DyckPath& d) {
    const PathStats st = path_stats(d);
    return st.maj0 + st.maj1 == st.maj;
  });
  r.scan<DyckPath>("psi_complement and reflect are commuting involutions", 1, n_max, paths, [](const DyckPath& d) {
    return psi_complement(psi_complement(d)) == d && reflect(reflect(d)) == d &&
           reflect(psi_complement(d)) == psi_complement(reflect(d));
  });
}

void suite_kappa(Runner& r, int n_max) {
  const auto avoiders = avoiders_of(Pattern::p132, r.limits());
  r.scan<Permutation>("kappa = reflect . psi_complement . phi . rho on S_n(132)", 1, n_max, avoiders,
                      [](const Permutation& s) { return kappa(s) == kappa_factored(s); });
  r.scan<Permutation>("Set_X(kappa s) = Des(s), Set_Y(kappa s) = {n - j : j in iDes(s)}", 1, n_max, avoiders,
                      [](const Permutation& s) {
                        const int n = s.size();
                        const ValleySet v = valleys(kappa(s));
                        IndexSet ys;
                        for (int j : descent_set(inverse(s))) ys.push_back(n - j);
                        return v.xs == descent_set(s) && v.ys == sorted_unique(ys);
                      });
  r.scan<Permutation>("Set_Y(kappa s) = {i + h_i : i in Des(s)}", 1, n_max, avoiders, [](const Permutation& s) {
    const auto h = heights(s);
    IndexSet ys;
    for (int i : descent_set(s)) ys.push_back(i + h[static_cast<std::size_t>(i - 1)]);
    return valleys(kappa(s)).ys == sorted_unique(ys);
  });
  r.scan<Permutation>("iDes(s) = {n - i - h_i : i in Des(s)}", 1, n_max, avoiders, [](const Permutation& s) {
    const int n = s.size();
    const auto h = heights(s);
    IndexSet out;
    for (int i : descent_set(s)) out.push_back(n - i - h[static_cast<std::size_t>(i - 1)]);
    return sorted_unique(out) == descent_set(inverse(s));
  });
  r.per_n("kappa is a bijection S_n(132) -> D_n", 1, n_max, [&](int n) {
    const auto perms = avoiders(n);
    auto images = kernels::transform(std::span<const Permutation>(perms), kappa, r.backend());
    std::sort(images.begin(), images.end());
    return images == enumerate_dyck(n, r.limits());
  });
}

void suite_inv_area(Runner& r, int n_max) {
  r.scan<Permutation>("inv(s) = area(psi_complement(phi(s))) on S_n(231)", 1, n_max,
                      avoiders_of(Pattern::p231, r.limits()),
                      [](const Permutation& s) { return inversions(s) == area(psi_complement(phi_unchecked(s))); });
  r.scan<Permutation>("inv(s) = area(beta(s)) on S_n(312)", 1, n_max, avoiders_of(Pattern::p312, r.limits()),
                      [](const Permutation& s) { return inversions(s) == area(beta(s)); });
  r.per_n("beta is a bijection S_n(312) -> D_n", 1, n_max, [&](int n) {
    const auto perms = enumerate_avoiders(n, Pattern::p312, r.limits());
    auto images = kernels::transform(std::span<const Permutation>(perms), beta, r.backend());
    std::sort(images.begin(), images.end());
    return images == enumerate_dyck(n, r.limits());
  });
}

void suite_symmetry(Runner& r, int n_max) {
  const Limits& lim = r.limits();
  const auto b = r.backend();
  r.per_n("A_n(q,t) = A_n(t,q)", 1, n_max, [&](int n) {
    const MultiPoly a = a_poly(n, lim, b);
    return specialize(a, QtSwap{}) == a;
  });
  r.per_n("Cat_n(q,t) = Cat_n(t,q)", 1, n_max, [&](int n) {
    const MultiPoly c = cat_qt(n, lim, b);
    return specialize(c, QtSwap{}) == c;
  });
  r.per_n("A_n via S_n(231) = A_n via D_n", 1, n_max,
          [&](int n) { return a_poly(n, lim, b) == a_poly_via_dyck(n, lim, b); });
  r.per_n("A_n(1,1) = Cat_n(1,1) = Cat_n", 1, n_max, [&](int n) {
    const Coefficient want = catalan_number(n);
    return a_poly(n, lim, b).evaluate(1, 1, 1) == want && cat_qt(n, lim, b).evaluate(1, 1, 1) == want;
  });
  r.per_n("q^C(n,2) A_n(q,1/q) = sum q^maj(D) = [2n,n]_q/[n+1]_q = q^C(n,2) Cat_n(q,1/q)", 1, n_max, [&](int n) {
    const MultiPoly mac = macmahon_q_catalan(n, lim, b);
    return specialize(a_poly(n, lim, b), TToQInverseShifted{n}) == mac && mac == macmahon_by_division(n) &&
           specialize(cat_qt(n, lim, b), TToQInverseShifted{n}) == mac;
  });
  r.scan<Permutation>("psi_perm is an involution complementing (des, maj, imaj)", 1, n_max,
                      avoiders_of(Pattern::p231, lim), [](const Permutation& s) {
                        const int n = s.size();
                        const Permutation t = psi_perm(s);
                        const PermStats a = perm_stats(s);
                        const PermStats c = perm_stats(t);
                        return psi_perm(t) == s && avoids(t, Pattern::p231) && c.des == n - 1 - a.des &&
                               a.maj == choose2(n) - c.imaj && a.imaj == choose2(n) - c.maj;
                      });
}

void suite_gf(Runner& r, int n_max) {
  auto report = [&](GfDenominator form, const std::string& label) {
    const auto residuals = verify_gf_identity(n_max, form, r.limits());
    for (std::size_t k = 0; k < residuals.size(); ++k) {
      if (!residuals[k].is_zero()) {
        r.record(label, false, "residual at z^" + std::to_string(k) + " is " + residuals[k].to_string(),
                 "z^" + std::to_string(k));
        return;
      }
    }
    r.record(label, true, "residuals through z^" + std::to_string(n_max) + " are exactly 0", "");
  };
  report(GfDenominator::through_n_plus_1, "sum A_n z^n / prod_{i=1..n+1} (1+q^i z)(1+t^i z) = 1");
  report(GfDenominator::shifted, "sum A_n z^n / ((1+z) prod_{i=1..n} (1+q^i z)(1+t^i z)) = 1");
}

void suite_tristat(Runner& r, int n_max) {
  const Limits& lim = r.limits();
  const auto b = r.backend();
  auto pair_check = [&](Pattern plain, Pattern complemented) {
    r.per_n("sum over S_n(" + std::string(pattern_name(plain)) + ") a^des q^maj t^imaj = complemented sum over S_n(" +
                std::string(pattern_name(complemented)) + ")",
            1, n_max, [&](int n) {
              return tristat_gf(n, plain, Orientation::plain, lim, b) ==
                     tristat_gf(n, complemented, Orientation::complemented, lim, b);
            });
  };
  pair_check(Pattern::p231, Pattern::p312);
  pair_check(Pattern::p132, Pattern::p213);
  r.per_n("a = 1 specialization of the 132/213 identity", 1, n_max, [&](int n) {
    auto drop_a = [](const MultiPoly& p) {
      MultiPoly out;
      for (const auto& [e, c] : p.terms()) out += MultiPoly::monomial({0, e.q, e.t}, c);
      return out;
    };
    return drop_a(tristat_gf(n, Pattern::p132, Orientation::plain, lim, b)) ==
           drop_a(tristat_gf(n, Pattern::p213, Orientation::complemented, lim, b));
  });
  pair_check(Pattern::p123, Pattern::p321);

  r.scan<Permutation>("trio_132_213 maps S_n(132) into S_n(213) complementing (des, maj, imaj)", 1, n_max,
                      avoiders_of(Pattern::p132, lim), [](const Permutation& s) {
                        const int n = s.size();
                        const Permutation t = trio_132_213(s);
                        const PermStats a = perm_stats(s);
                        const PermStats c = perm_stats(t);
                        return avoids(t, Pattern::p213) && c.des == n - 1 - a.des && c.maj == choose2(n) - a.maj &&
                               c.imaj == choose2(n) - a.imaj;
                      });
  r.per_n("trio_132_213 is onto S_n(213)", 1, n_max, [&](int n) {
    const auto perms = enumerate_avoiders(n, Pattern::p132, lim);
    auto images = kernels::transform(std::span<const Permutation>(perms), trio_132_213, b);
    std::sort(images.begin(), images.end());
    return images == enumerate_avoiders(n, Pattern::p213, lim);
  });
  r.scan<Permutation>("complement . j maps S_n(321) into S_n(123) complementing (des, maj, imaj)", 1, n_max,
                      avoiders_of(Pattern::p321, lim), [](const Permutation& s) {
                        const int n = s.size();
                        const Permutation t = complement(j_involution(s));
                        const PermStats a = perm_stats(s);
                        const PermStats c = perm_stats(t);
                        return avoids(t, Pattern::p123) && c.des == n - 1 - a.des && c.maj == choose2(n) - a.maj &&
                               c.imaj == choose2(n) - a.imaj;
                      });
}

void suite_rsk(Runner& r, int n_max) {
  const Limits& lim = r.limits();
  const int sym_max = std::min(n_max, kExhaustiveSymmetricMax);
  r.scan<Permutation>("inverse_rsk(rsk(s)) = s", 1, sym_max, all_perms(lim), [](const Permutation& s) {
    const RskPair pq = rsk(s);
    return inverse_rsk(pq.insertion, pq.recording) == s;
  });
  r.scan<Permutation>("Des(s) = Des(Q), iDes(s) = Des(P)", 1, sym_max, all_perms(lim), [](const Permutation& s) {
    const RskPair pq = rsk(s);
    return descent_set(s) == tableau_descents(pq.recording) &&
           descent_set(inverse(s)) == tableau_descents(pq.insertion);
  });
  r.scan<Permutation>("s avoids 321 iff its RSK shape has at most 2 rows", 1, sym_max, all_perms(lim),
                      [](const Permutation& s) { return avoids(s, Pattern::p321) == (rsk(s).insertion.rows().size() <= 2); });
  r.scan<StandardTableau>("evacuation is a shape-preserving involution reversing descents", 1, sym_max,
                          [](int n) { return enumerate_syt(n); }, [](const StandardTableau& t) {
                            const StandardTableau e = evacuation(t);
                            IndexSet want;
                            for (int i : tableau_descents(t)) want.push_back(t.size() - i);
                            return evacuation(e) == t && e.shape() == t.shape() &&
                                   tableau_descents(e) == sorted_unique(want);
                          });
  r.scan<Permutation>("j is an involution on S_n(321) keeping Des and reflecting iDes", 1, n_max,
                      avoiders_of(Pattern::p321, lim), [](const Permutation& s) {
                        const int n = s.size();
                        const Permutation t = j_involution(s);
                        IndexSet want;
                        for (int j : descent_set(inverse(s))) want.push_back(n - j);
                        return avoids(t, Pattern::p321) && j_involution(t) == s && descent_set(t) == descent_set(s) &&
                               descent_set(inverse(t)) == sorted_unique(want);
                      });
}

void suite_kd(Runner& r, int n_max) {
  const Limits& lim = r.limits();
  r.per_n("a shift assignment k_D >= 0 exists (augmenting-path matching)", 1, n_max, [&](int n) {
    const auto k = kd_find_one(n, lim);
    return !k.empty() && kd_assignment_valid(n, k, lim);
  });
  r.per_n("enumerated assignments match the nested binomial count", 1, std::min(n_max, 5), [&](int n) {
    const KdSearchResult res = kd_search(n, KdOptions{5, 100000, lim});
    if (!res.complete || res.count != static_cast<long long>(res.assignments.size())) return false;
    for (const auto& k : res.assignments) {
      if (!kd_assignment_valid(n, k, lim)) return false;
    }
    return true;
  });
  if (n_max >= 4) {
    const KdSearchResult res = kd_search(4, KdOptions{5, 100000, lim});
    std::set<std::string> shifted;
    bool shape_ok = res.assignments.size() == 2;
    for (const auto& k : res.assignments) {
      int ones = 0;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 1) {
          ++ones;
          shifted.insert(res.paths[i].word());
        } else if (k[i] != 0) {
          shape_ok = false;
        }
      }
      if (ones != 1) shape_ok = false;
    }
    const bool ok = shape_ok && shifted == std::set<std::string>{"01010011", "00011101"};
    std::string listed;
    for (const auto& w : shifted) listed += (listed.empty() ? "k=1 on " : " | k=1 on ") + w;
    r.record("n=4 has exactly the two assignments k=1 on 01010011 or on 00011101", ok,
             std::to_string(res.assignments.size()) + " assignment(s): " + listed, ok ? "" : "n=4");
    const bool swap = psi_complement(DyckPath("01010011")) == DyckPath("00011101") &&
                      psi_complement(DyckPath("00011101")) == DyckPath("01010011");
    r.record("psi_complement swaps 01010011 and 00011101", swap, swap ? "swapped" : "not swapped",
             swap ? "" : "01010011");
  }
}

using SuiteFn = void (*)(Runner&, int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"phi", suite_phi},         {"lemmas", suite_lemmas}, {"kappa-factorization", suite_kappa},
      {"inv-area", suite_inv_area}, {"symmetry", suite_symmetry}, {"gf-identity", suite_gf},
      {"tristat", suite_tristat}, {"rsk-j", suite_rsk},     {"kd", suite_kd},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, int n_max, const VerifyOptions& options) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be positive");
  check_limit(n_max, options.limits);
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    Runner runner(name, options);
    fn(runner, n_max);
    auto results = runner.take();
    out.insert(out.end(), results.begin(), results.end());
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace qtcat
