// Acceptance gate: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is 0 when every criterion passes, or, with --expect-fail, when
// the failing set is exactly the listed one.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "oracles.hpp"
#include "qtcat/bijections.hpp"
#include "qtcat/generating.hpp"
#include "qtcat/kd_search.hpp"
#include "qtcat/tableau.hpp"
#include "qtcat/verify.hpp"

using namespace qtcat;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

// All named checks of `suite` up to n_max must pass, optionally filtered by name.
Verdict suite_passes(const std::string& suite, int n_max, const std::function<bool(const std::string&)>& keep = {}) {
  int count = 0;
  for (const auto& r : run_suite(suite, n_max)) {
    if (keep && !keep(r.name)) continue;
    ++count;
    if (!r.passed) return {false, r.name + ": " + r.detail + " [" + r.counterexample + "]"};
  }
  return {count > 0, std::to_string(count) + " checks, n<=" + std::to_string(n_max)};
}

MultiPoly qt(std::initializer_list<std::tuple<int, int, int>> terms) {
  MultiPoly p;
  for (const auto& [a, b, c] : terms) p += MultiPoly::monomial({0, a, b}, c);
  return p;
}

Verdict golden() {
  const Permutation s({6, 2, 1, 5, 4, 3});
  const DyckPath d = phi(s);
  const PermStats st = perm_stats(s);
  if (d.word() != "010010110101" || st.maj != 12 || st.imaj != 13 || path_stats(d).maj != 25) {
    return {false, "phi([6,2,1,5,4,3]) = " + d.word()};
  }
  if (kappa(Permutation({3, 4, 5, 1, 2, 6})).word() != "000011100111") return {false, "kappa example"};
  const std::vector<std::pair<std::vector<int>, std::string>> pairs = {
      {{1, 2, 3, 4}, "00001111"}, {{4, 1, 2, 3}, "00010111"}, {{1, 4, 2, 3}, "00011011"},
      {{1, 2, 4, 3}, "00011101"}, {{3, 1, 2, 4}, "00100111"}, {{4, 3, 1, 2}, "00101011"},
      {{4, 1, 3, 2}, "00101101"}, {{1, 3, 2, 4}, "00110011"}, {{1, 4, 3, 2}, "00110101"},
      {{2, 1, 3, 4}, "01000111"}, {{4, 2, 1, 3}, "01001011"}, {{2, 1, 4, 3}, "01001101"},
      {{3, 2, 1, 4}, "01010011"}, {{4, 3, 2, 1}, "01010101"},
  };
  for (const auto& [w, path] : pairs) {
    if (phi(Permutation(w)).word() != path) return {false, Permutation(w).to_string() + " -> " + phi(Permutation(w)).word()};
  }
  return {true, "3 worked examples + 14 pairs"};
}

Verdict bijectivity() {
  for (int n = 1; n <= 9; ++n) {
    const auto perms = enumerate_avoiders(n, Pattern::p231);
    if (static_cast<long long>(perms.size()) != oracle::catalan(n)) return {false, "count at n=" + std::to_string(n)};
    std::vector<DyckPath> images;
    for (const auto& s : perms) {
      images.push_back(phi(s));
      if (phi_inv(images.back()) != s) return {false, "round trip " + s.to_string()};
    }
    std::sort(images.begin(), images.end());
    if (images != enumerate_dyck(n)) return {false, "image differs from D_" + std::to_string(n)};
    for (const auto& d : images) {
      if (phi(phi_inv(d)) != d) return {false, "round trip " + d.word()};
    }
  }
  return {true, "n<=9, counts 1..4862"};
}

Verdict transport() {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& s : enumerate_avoiders(n, Pattern::p231)) {
      const PermStats ps = perm_stats(s);
      const PathStats ds = path_stats(phi(s));
      if (ds.maj != ps.maj + ps.imaj || ds.maj1 != ps.maj || ds.maj0 != ps.imaj) return {false, s.to_string()};
    }
  }
  return {true, "n<=9"};
}

Verdict polynomials() {
  const bool a = a_poly(1) == qt({{0, 0, 1}}) && a_poly(2) == qt({{1, 0, 1}, {0, 1, 1}}) &&
                 a_poly(3) == qt({{3, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 3, 1}, {1, 1, 1}}) &&
                 a_poly(4) == qt({{6, 0, 1}, {5, 1, 1}, {4, 2, 1}, {3, 3, 2}, {2, 4, 1}, {1, 5, 1}, {0, 6, 1},
                                  {4, 1, 1}, {3, 2, 1}, {2, 3, 1}, {1, 4, 1}, {3, 1, 1}, {1, 3, 1}});
  const bool c = cat_qt(4) == qt({{6, 0, 1}, {5, 1, 1}, {4, 2, 1}, {3, 3, 1}, {2, 4, 1}, {1, 5, 1}, {0, 6, 1},
                                  {4, 1, 1}, {3, 2, 1}, {2, 3, 1}, {1, 4, 1}, {3, 1, 1}, {2, 2, 1}, {1, 3, 1}});
  const MultiPoly diff = a_poly(4) - cat_qt(4);
  const bool d = diff == qt({{3, 3, 1}, {2, 2, -1}});
  return {a && c && d, "A_1..A_4, Cat_4, A_4 - Cat_4 = " + diff.to_string()};
}

Verdict symmetry() {
  for (int n = 1; n <= 8; ++n) {
    if (specialize(a_poly(n), QtSwap{}) != a_poly(n)) return {false, "A_" + std::to_string(n)};
    if (specialize(cat_qt(n), QtSwap{}) != cat_qt(n)) return {false, "Cat_" + std::to_string(n)};
  }
  return {true, "n<=8"};
}

Verdict specializations() {
  for (int n = 1; n <= 8; ++n) {
    const MultiPoly mac = macmahon_q_catalan(n);
    if (specialize(a_poly(n), TToQInverseShifted{n}) != mac || macmahon_by_division(n) != mac ||
        specialize(cat_qt(n), TToQInverseShifted{n}) != mac) {
      return {false, "n=" + std::to_string(n)};
    }
  }
  return {true, "four-way equality, n<=8"};
}

Verdict gf_identity() {
  const auto unshifted = verify_gf_identity(6, GfDenominator::through_n_plus_1);
  const auto shifted = verify_gf_identity(6, GfDenominator::shifted);
  const bool shifted_zero = std::all_of(shifted.begin(), shifted.end(), [](const MultiPoly& p) { return p.is_zero(); });
  for (std::size_t k = 0; k < unshifted.size(); ++k) {
    if (!unshifted[k].is_zero()) {
      return {false, "prod_{i=1..n+1} denominators leave " + unshifted[k].to_string() + " at z^" + std::to_string(k) +
                         "; with (1+z) prod_{i=1..n} denominators the residuals are " +
                         (shifted_zero ? "all 0" : "nonzero")};
    }
  }
  return {true, "residuals 0 through z^6"};
}

Verdict factorization() {
  return suite_passes("kappa-factorization", 8);
}

Verdict inv_area() {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& s : enumerate_avoiders(n, Pattern::p231)) {
      if (inversions(s) != area(psi_complement(phi(s)))) return {false, s.to_string()};
    }
  }
  return {true, "n<=8"};
}

Verdict tristat() {
  for (int n = 1; n <= 7; ++n) {
    const auto drop_a = [](const MultiPoly& p) {
      MultiPoly out;
      for (const auto& [e, c] : p.terms()) out += MultiPoly::monomial({0, e.q, e.t}, c);
      return out;
    };
    const auto p132 = tristat_gf(n, Pattern::p132, Orientation::plain);
    const auto c213 = tristat_gf(n, Pattern::p213, Orientation::complemented);
    if (tristat_gf(n, Pattern::p231, Orientation::plain) != tristat_gf(n, Pattern::p312, Orientation::complemented) ||
        p132 != c213 || drop_a(p132) != drop_a(c213) ||
        tristat_gf(n, Pattern::p123, Orientation::plain) != tristat_gf(n, Pattern::p321, Orientation::complemented)) {
      return {false, "n=" + std::to_string(n)};
    }
  }
  return {true, "231/312, 132/213 (+ a=1), 123/321, n<=7"};
}

Verdict tableaux() {
  return suite_passes("rsk-j", 7);
}

Verdict kd() {
  const KdSearchResult four = kd_search(4);
  std::set<std::string> shifted;
  for (const auto& k : four.assignments) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] != 0) shifted.insert(four.paths[i].word() + ":" + std::to_string(k[i]));
    }
  }
  if (!four.complete || four.assignments.size() != 2 ||
      shifted != std::set<std::string>{"00011101:1", "01010011:1"}) {
    return {false, "n=4 assignments differ"};
  }
  for (int n = 1; n <= 8; ++n) {
    const auto k = kd_find_one(n);
    if (k.empty() || !kd_assignment_valid(n, k)) return {false, "no assignment at n=" + std::to_string(n)};
  }
  return {true, "n=4: exactly 2; assignment found for every n<=8"};
}

Verdict psi_swap() {
  const bool ok = psi_complement(DyckPath("01010011")).word() == "00011101" &&
                  psi_complement(DyckPath("00011101")).word() == "01010011";
  return {ok, "01010011 <-> 00011101"};
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected_failures.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail ID]...\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "golden examples", 1, golden},
      {2, "phi bijectivity", 10, bijectivity},
      {3, "statistic transport", 10, transport},
      {4, "lemma suite", 10, [] { return suite_passes("lemmas", 8); }},
      {5, "polynomials", 1, polynomials},
      {6, "q,t symmetry", 30, symmetry},
      {7, "specializations", 30, specializations},
      {8, "generating-function identity", 5, gf_identity},
      {9, "kappa factorization", 10, factorization},
      {10, "inv/area bridge", 10, inv_area},
      {11, "tristatistic identities", 30, tristat},
      {12, "tableaux", 30, tableaux},
      {13, "k_D search", 60, kd},
      {14, "psi swaps the two n=4 paths", 1, psi_swap},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = v.ok && in_time;
    if (!ok) failed.insert(c.id);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "  (" << v.detail << "; " << secs
              << " s, limit " << c.limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << ")\n";
  }
  std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria passed\n";
  if (!expected_failures.empty()) {
    if (failed == expected_failures) {
      std::cout << "failing set matches the documented expectation\n";
      return 0;
    }
    std::cout << "failing set differs from the documented expectation\n";
    return 1;
  }
  return failed.empty() ? 0 : 1;
}
