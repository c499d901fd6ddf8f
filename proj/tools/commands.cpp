#include "commands.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <variant>

#include "qtcat/bijections.hpp"
#include "qtcat/generating.hpp"
#include "qtcat/json_io.hpp"
#include "qtcat/tableau.hpp"
#include "qtcat/verify.hpp"

namespace qtcat::cli {

namespace {

using Object = std::variant<Permutation, DyckPath>;

struct MapSpec {
  bool takes_path;
  std::function<Object(const Object&)> apply;
};

template <class F>
MapSpec on_perm(F f) {
  return {false, [f](const Object& x) { return Object(f(std::get<Permutation>(x))); }};
}

template <class F>
MapSpec on_path(F f) {
  return {true, [f](const Object& x) { return Object(f(std::get<DyckPath>(x))); }};
}

const std::map<std::string, MapSpec>& bijections() {
  static const std::map<std::string, MapSpec> table = {
      {"phi", on_perm(phi)},
      {"phi-inv", on_path(phi_inv)},
      {"psi-perm", on_perm(psi_perm)},
      {"psi-path", on_path(psi_complement)},
      {"reflect", on_path(reflect)},
      {"rho", on_perm(reverse_rho)},
      {"inverse", on_perm(static_cast<Permutation (*)(const Permutation&)>(inverse))},
      {"kappa", on_perm(kappa)},
      {"beta", on_perm(beta)},
      {"trio", on_perm(trio_132_213)},
      {"j", on_perm(j_involution)},
  };
  return table;
}

std::string stats_line(const Permutation& s) {
  const PermStats st = perm_stats(s);
  return "des=" + std::to_string(st.des) + " maj=" + std::to_string(st.maj) + " imaj=" + std::to_string(st.imaj);
}

std::string stats_line(const DyckPath& d) {
  const PathStats st = path_stats(d);
  return "maj=" + std::to_string(st.maj) + " maj0=" + std::to_string(st.maj0) + " maj1=" + std::to_string(st.maj1) +
         " area=" + std::to_string(area(d)) + " bounce=" + std::to_string(bounce(d));
}

std::string show(const Object& x) {
  return std::visit([](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Permutation>) {
      return v.to_string();
    } else {
      return v.word();
    }
  }, x);
}

int cmd_map(const std::string& name, const std::string& input, std::ostream& out) {
  auto it = bijections().find(name);
  if (it == bijections().end()) throw Error(ErrorCode::InvalidArgument, "unknown bijection '" + name + "'");
  const Object x = it->second.takes_path ? Object(parse_path(input)) : Object(parse_permutation(input));
  const Object y = it->second.apply(x);
  out << show(y) << '\n';
  std::visit([&](const auto& v) { out << stats_line(v) << '\n'; }, y);
  return kOk;
}

MultiPoly build_poly(const std::string& which, int n, const Limits& limits, Backend backend) {
  if (which == "a") return a_poly(n, limits, backend);
  if (which == "cat") return cat_qt(n, limits, backend);
  if (which == "macmahon") return macmahon_q_catalan(n, limits, backend);
  const std::string prefix = "tristat:";
  if (which.rfind(prefix, 0) == 0) {
    const std::string rest = which.substr(prefix.size());
    const auto colon = rest.find(':');
    const Pattern p = parse_pattern(rest.substr(0, colon));
    Orientation o = Orientation::plain;
    if (colon != std::string::npos) {
      const std::string orient = rest.substr(colon + 1);
      if (orient == "complemented") {
        o = Orientation::complemented;
      } else if (orient != "plain") {
        throw Error(ErrorCode::InvalidArgument, "orientation must be plain or complemented");
      }
    }
    return tristat_gf(n, p, o, limits, backend);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown polynomial '" + which + "'");
}

int cmd_poly(const std::string& which, int n, const std::string& format, const Limits& limits, Backend backend,
             std::ostream& out) {
  const MultiPoly p = build_poly(which, n, limits, backend);
  if (format == "json") {
    auto j = json_io::to_json(p);
    j["name"] = which;
    j["n"] = n;
    out << j.dump() << '\n';
  } else {
    out << p.to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& suite, int n_max, const std::string& format, const VerifyOptions& options,
               std::ostream& out) {
  const auto results = run_suite(suite, n_max, options);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(json_io::to_json(r));
    out << nlohmann::json{{"passed", all}, {"checks", arr}}.dump() << '\n';
    return all ? kOk : kVerificationFailed;
  }
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << "  " << r.name << "  (" << r.detail << ")\n";
    if (!r.passed) {
      ++failed;
      out << "      counterexample: " << r.counterexample << '\n';
    }
  }
  out << results.size() - static_cast<std::size_t>(failed) << '/' << results.size() << " checks passed\n";
  return all ? kOk : kVerificationFailed;
}

std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : '"' + s + '"';
}

int cmd_enumerate(const std::string& kind, int n, const std::string& format, const Limits& limits,
                  std::ostream& out) {
  auto emit = [&](const auto& items, const char* header, auto record, auto line) {
    if (format == "json") {
      auto arr = nlohmann::json::array();
      for (const auto& x : items) arr.push_back(record(x));
      out << arr.dump() << '\n';
      return;
    }
    if (format == "csv") out << header << '\n';
    for (const auto& x : items) out << line(x, format == "csv") << '\n';
  };

  if (kind == "dyck") {
    emit(enumerate_dyck(n, limits), "path,maj,maj0,maj1,area,bounce", json_io::path_record,
         [](const DyckPath& d, bool csv) {
           const PathStats st = path_stats(d);
           if (csv) {
             return d.word() + ',' + std::to_string(st.maj) + ',' + std::to_string(st.maj0) + ',' +
                    std::to_string(st.maj1) + ',' + std::to_string(area(d)) + ',' + std::to_string(bounce(d));
           }
           return d.word() + "  " + stats_line(d);
         });
    return kOk;
  }
  const std::string prefix = "avoiders:";
  if (kind.rfind(prefix, 0) != 0) throw Error(ErrorCode::InvalidArgument, "unknown kind '" + kind + "'");
  const Permutation tau = parse_permutation(kind.substr(prefix.size()));
  emit(enumerate_avoiders(n, tau, limits), "perm,des,maj,imaj,inv", json_io::perm_record,
       [](const Permutation& s, bool csv) {
         const PermStats st = perm_stats(s);
         if (csv) {
           return csv_quote(s.to_string()) + ',' + std::to_string(st.des) + ',' + std::to_string(st.maj) + ',' +
                  std::to_string(st.imaj) + ',' + std::to_string(st.inv);
         }
         return s.to_string() + "  " + stats_line(s) + " inv=" + std::to_string(st.inv);
       });
  return kOk;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput:
    case ErrorCode::NonBinaryCharacter:
    case ErrorCode::UnbalancedCounts:
    case ErrorCode::PrefixViolation:
    case ErrorCode::MalformedPermutation:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidValleySet:
    case ErrorCode::InvalidDescentData:
    case ErrorCode::InvalidTableau:
      return kParseError;
    case ErrorCode::NotAvoiding231:
    case ErrorCode::NotAvoiding312:
    case ErrorCode::NotAvoiding132:
    case ErrorCode::NotAvoiding321:
      return kPrecondition;
    case ErrorCode::ResourceLimit:
      return kResourceLimit;
    case ErrorCode::NoAssignment:
    case ErrorCode::NegativeExponent:
    case ErrorCode::Internal:
      return kVerificationFailed;
  }
  return kVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoiding permutations, Dyck paths and q,t-Catalan polynomials"};
  app.require_subcommand(1);
  Limits limits;
  std::string backend_name = "openmp";
  app.add_option("--max-n", limits.max_n, "Ceiling on n for exhaustive enumeration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--backend", backend_name, "Kernel backend")->capture_default_str()->check(
      CLI::IsMember({"serial", "openmp"}));

  std::string map_name, map_input;
  auto* map = app.add_subcommand("map", "Apply a bijection or involution and print the image with its statistics");
  map->add_option("bijection", map_name, "phi, phi-inv, psi-perm, psi-path, reflect, rho, inverse, kappa, beta, trio, j")
      ->required();
  map->add_option("input", map_input, "Permutation like [6,2,1,5,4,3] or 0/1 path word")->required();

  std::string poly_name, poly_format = "text";
  int poly_n = 0;
  auto* poly = app.add_subcommand("poly", "Print a polynomial: a, cat, macmahon, tristat:<class>:<plain|complemented>");
  poly->add_option("which", poly_name)->required();
  poly->add_option("n", poly_n)->required()->check(CLI::PositiveNumber);
  poly->add_option("--format", poly_format)->check(CLI::IsMember({"text", "json"}));

  std::string suite, verify_format = "text";
  int verify_n = 0;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite for n = 1..n_max");
  verify->add_option("suite", suite)->required();
  verify->add_option("n_max", verify_n)->required()->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  std::string kind, enum_format = "lines";
  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List avoiders:<pattern> or dyck objects of size n");
  enumerate->add_option("kind", kind)->required();
  enumerate->add_option("n", enum_n)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"lines", "json", "csv"}));

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();  // program name
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const Backend backend = backend_name == "serial" ? Backend::serial : Backend::openmp;
  try {
    if (*map) return cmd_map(map_name, map_input, out);
    if (*poly) return cmd_poly(poly_name, poly_n, poly_format, limits, backend, out);
    if (*verify) {
      if (suite != "all") {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
          throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
        }
      }
      return cmd_verify(suite, verify_n, verify_format, VerifyOptions{limits, backend}, out);
    }
    if (*enumerate) return cmd_enumerate(kind, enum_n, enum_format, limits, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParseError;
}

}  // namespace qtcat::cli
