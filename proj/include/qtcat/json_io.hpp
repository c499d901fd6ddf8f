#pragma once

// JSON forms shared by the CLI and tests. Schemas are listed in README.md.

#include <json.hpp>

#include "qtcat/dyck.hpp"
#include "qtcat/kd_search.hpp"
#include "qtcat/multipoly.hpp"
#include "qtcat/permutation.hpp"
#include "qtcat/tableau.hpp"
#include "qtcat/verify.hpp"

namespace qtcat::json_io {

using nlohmann::json;

inline json to_json(const ValleySet& v) { return json{{"n", v.n}, {"xs", v.xs}, {"ys", v.ys}}; }

inline ValleySet valley_set_from_json(const json& j) {
  try {
    return ValleySet{j.at("n").get<int>(), j.at("xs").get<IndexSet>(), j.at("ys").get<IndexSet>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad valley set JSON: ") + e.what());
  }
}

inline json to_json(const StandardTableau& t) { return json(t.rows()); }

/// Coefficients are written as strings so that values beyond 64 bits survive.
inline json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"a", it->first.a}, {"q", it->first.q}, {"t", it->first.t}, {"coef", it->second.str()}});
  }
  return json{{"terms", terms}};
}

inline MultiPoly poly_from_json(const json& j) {
  try {
    MultiPoly::Terms terms;
    for (const auto& term : j.at("terms")) {
      Exponent e{term.at("a").get<int>(), term.at("q").get<int>(), term.at("t").get<int>()};
      terms[e] += Coefficient(term.at("coef").get<std::string>());
    }
    return MultiPoly(std::move(terms));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad polynomial JSON: ") + e.what());
  }
}

inline json perm_record(const Permutation& s) {
  const PermStats st = perm_stats(s);
  return json{{"perm", s.word()}, {"des", st.des}, {"maj", st.maj}, {"imaj", st.imaj}, {"inv", st.inv}};
}

inline json path_record(const DyckPath& d) {
  const PathStats st = path_stats(d);
  return json{{"path", d.word()}, {"maj", st.maj},      {"maj0", st.maj0},
              {"maj1", st.maj1},  {"area", area(d)},    {"bounce", bounce(d)}};
}

/// {"n", "count", "complete", "assignments": [{path-word: k, ...}, ...]}
inline json to_json(const KdSearchResult& r) {
  json assignments = json::array();
  for (const auto& k : r.assignments) {
    json obj = json::object();
    for (std::size_t i = 0; i < k.size(); ++i) obj[r.paths[i].word()] = k[i];
    assignments.push_back(std::move(obj));
  }
  return json{{"n", r.n}, {"count", r.count.str()}, {"complete", r.complete}, {"assignments", assignments}};
}

inline json to_json(const CheckResult& c) {
  return json{{"suite", c.suite},   {"name", c.name},
              {"passed", c.passed}, {"detail", c.detail},
              {"counterexample", c.counterexample}};
}

}  // namespace qtcat::json_io
