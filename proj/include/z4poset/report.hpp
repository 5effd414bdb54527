#pragma once

// End-to-end analysis of one ideal and its serialization (JSON and a
// line-oriented text form that parses back to the same facts).

#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "z4poset/analysis.hpp"
#include "z4poset/construction.hpp"
#include "z4poset/poset.hpp"

namespace z4poset {

/// Brute force runs without --verify up to this n.
inline constexpr int kDefaultBruteForceDim = 7;

struct AnalyzeOptions {
  bool gray = false;
  bool verify = false;
  unsigned jobs = 1;
};

struct QuaternaryParams {
  std::uint64_t length = 0;
  std::uint64_t size = 0;
  std::uint64_t min_distance = 0;

  friend bool operator==(const QuaternaryParams&, const QuaternaryParams&) = default;
};

struct MethodProvenance {
  bool closed_form = true;
  bool brute_force = false;
  bool fast_path = false;
  bool enumerated_size = false;
  bool agree = true;

  friend bool operator==(const MethodProvenance&, const MethodProvenance&) = default;
};

struct AnalysisReport {
  OrderIdealSpec spec;
  std::uint64_t length = 0;
  std::uint64_t size = 0;
  std::uint64_t kernel_size = 0;
  WeightMap lee_multiplicity;
  WeightMap lee_distinct;
  QuaternaryParams quaternary;
  std::optional<GrayImageReport> gray;
  MethodProvenance methods;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline std::uint64_t log2_exact(std::uint64_t v) {
  return static_cast<std::uint64_t>(std::countr_zero(v));
}

/// "[8,3,4]" for a linear image (dimension form), "(64, 64, 32)" otherwise.
inline std::string binary_params_string(const GrayImageReport& g) {
  std::ostringstream os;
  if (g.is_linear)
    os << '[' << g.binary_length << ',' << log2_exact(g.binary_size) << ',' << g.min_distance << ']';
  else
    os << '(' << g.binary_length << ", " << g.binary_size << ", " << g.min_distance << ')';
  return os.str();
}

inline std::string quaternary_params_string(const QuaternaryParams& q) {
  return "(" + std::to_string(q.length) + ", " + std::to_string(q.size) + ", " + std::to_string(q.min_distance) +
         ")_L";
}

/// Runs the closed form always, the fast path and the size enumeration when
/// n fits the materialization cap, brute force when n <= 7 or `verify`, and
/// the Gray analysis on request. `methods.agree` is false on any mismatch.
inline AnalysisReport analyze(const OrderIdealSpec& spec, const AnalyzeOptions& opt = {}) {
  validate_spec(spec);
  const int n = spec.n();
  AnalysisReport rep;
  rep.spec = spec;
  rep.length = code_length(spec);

  const auto closed = closed_form_distribution(spec);
  rep.lee_multiplicity = closed.multiplicity;
  rep.lee_distinct = closed.distinct;
  rep.kernel_size = closed.kernel_size;
  rep.size = closed.code_size();

  if (opt.verify && n > kMaxBruteForceDim)
    throw CapacityError("--verify needs n <= " + std::to_string(kMaxBruteForceDim));
  if (n <= kMaxMaterializeDim || opt.gray) {
    const auto sets = make_defining_sets(spec);
    rep.methods.fast_path = true;
    if (fast_path_distribution(spec) != closed) rep.methods.agree = false;
    rep.methods.enumerated_size = true;
    const auto ks = kernel_and_size(sets);
    if (ks.kernel_size != closed.kernel_size || ks.code_size != rep.size) rep.methods.agree = false;
    if (n <= kDefaultBruteForceDim || opt.verify) {
      rep.methods.brute_force = true;
      if (brute_force_distribution(sets, opt.jobs) != closed) rep.methods.agree = false;
    }
    if (opt.gray) {
      rep.gray = gray_linearity(sets);
      if (rep.gray->binary_size != rep.size) rep.methods.agree = false;
    }
  }
  rep.quaternary = {rep.length, rep.size, min_lee_weight(closed)};
  return rep;
}

// ---- JSON --------------------------------------------------------------

namespace detail {

inline nlohmann::json weight_map_json(const WeightMap& m) {
  auto arr = nlohmann::json::array();
  for (auto [w, c] : m) arr.push_back({w, c});
  return arr;
}

inline WeightMap weight_map_from_json(const nlohmann::json& j) {
  WeightMap m;
  for (const auto& e : j) m[e.at(0).get<std::uint64_t>()] = e.at(1).get<std::uint64_t>();
  return m;
}

inline IdealKind parse_kind(const std::string& s) {
  if (s == "chain-one") return IdealKind::ChainOne;
  if (s == "chain-two") return IdealKind::ChainTwo;
  if (s == "union") return IdealKind::Union;
  throw ParameterError("unknown ideal kind '" + s + "'");
}

}  // namespace detail

inline nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json j;
  j["n"] = r.spec.n();
  j["m"] = r.spec.m();
  j["ideal"] = {{"kind", to_string(r.spec.kind)},
                {"i", r.spec.has_chain_one() ? json(r.spec.i) : json(nullptr)},
                {"j", r.spec.has_chain_two() ? json(r.spec.j) : json(nullptr)}};
  j["length"] = r.length;
  j["size"] = r.size;
  j["kernel_size"] = r.kernel_size;
  j["lee_multiplicity"] = detail::weight_map_json(r.lee_multiplicity);
  j["lee_distinct"] = detail::weight_map_json(r.lee_distinct);
  j["quaternary_params"] = {r.quaternary.length, r.quaternary.size, r.quaternary.min_distance};
  if (r.gray) {
    const auto& g = *r.gray;
    j["gray"] = {{"binary_length", g.binary_length},
                 {"binary_size", g.binary_size},
                 {"min_distance", g.min_distance},
                 {"linear", g.is_linear},
                 {"witness", g.witness ? json::array({g.witness->first, g.witness->second}) : json(nullptr)}};
  } else {
    j["gray"] = nullptr;
  }
  j["methods"] = {{"closed_form", r.methods.closed_form},
                  {"brute_force", r.methods.brute_force},
                  {"fast_path", r.methods.fast_path},
                  {"enumerated_size", r.methods.enumerated_size},
                  {"agree", r.methods.agree}};
  return j;
}

inline AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport r;
  const auto& ideal = j.at("ideal");
  r.spec.kind = detail::parse_kind(ideal.at("kind").get<std::string>());
  r.spec.poset = {j.at("n").get<int>(), j.at("m").get<int>()};
  r.spec.i = ideal.at("i").is_null() ? 0 : ideal.at("i").get<int>();
  r.spec.j = ideal.at("j").is_null() ? 0 : ideal.at("j").get<int>();
  r.length = j.at("length").get<std::uint64_t>();
  r.size = j.at("size").get<std::uint64_t>();
  r.kernel_size = j.at("kernel_size").get<std::uint64_t>();
  r.lee_multiplicity = detail::weight_map_from_json(j.at("lee_multiplicity"));
  r.lee_distinct = detail::weight_map_from_json(j.at("lee_distinct"));
  const auto& q = j.at("quaternary_params");
  r.quaternary = {q.at(0).get<std::uint64_t>(), q.at(1).get<std::uint64_t>(), q.at(2).get<std::uint64_t>()};
  if (!j.at("gray").is_null()) {
    const auto& g = j.at("gray");
    GrayImageReport gr;
    gr.binary_length = g.at("binary_length").get<std::uint64_t>();
    gr.binary_size = g.at("binary_size").get<std::uint64_t>();
    gr.min_distance = g.at("min_distance").get<std::uint64_t>();
    gr.is_linear = g.at("linear").get<bool>();
    if (!g.at("witness").is_null()) gr.witness = std::pair{g.at("witness").at(0).get<int>(), g.at("witness").at(1).get<int>()};
    r.gray = gr;
  }
  const auto& m = j.at("methods");
  r.methods = {m.at("closed_form").get<bool>(), m.at("brute_force").get<bool>(), m.at("fast_path").get<bool>(),
               m.at("enumerated_size").get<bool>(), m.at("agree").get<bool>()};
  return r;
}

// ---- text --------------------------------------------------------------

namespace detail {

inline std::string weight_map_text(const WeightMap& m) {
  std::string s;
  for (auto [w, c] : m) {
    if (!s.empty()) s.push_back(' ');
    s += std::to_string(w) + ":" + std::to_string(c);
  }
  return s;
}

inline WeightMap weight_map_from_text(const std::string& s) {
  WeightMap m;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParameterError("bad weight entry '" + tok + "'");
    m[std::stoull(tok.substr(0, colon))] = std::stoull(tok.substr(colon + 1));
  }
  return m;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline void write_text(std::ostream& os, const AnalysisReport& r) {
  os << "n: " << r.spec.n() << '\n';
  os << "m: " << r.spec.m() << '\n';
  os << "ideal: " << r.spec.describe() << '\n';
  os << "length: " << r.length << '\n';
  os << "size: " << r.size << '\n';
  os << "kernel_size: " << r.kernel_size << '\n';
  os << "lee_multiplicity: " << detail::weight_map_text(r.lee_multiplicity) << '\n';
  os << "lee_distinct: " << detail::weight_map_text(r.lee_distinct) << '\n';
  os << "quaternary_params: " << quaternary_params_string(r.quaternary) << '\n';
  if (r.gray) {
    const auto& g = *r.gray;
    os << "gray.binary_length: " << g.binary_length << '\n';
    os << "gray.binary_size: " << g.binary_size << '\n';
    os << "gray.min_distance: " << g.min_distance << '\n';
    os << "gray.linear: " << detail::yes_no(g.is_linear) << '\n';
    os << "gray.witness: ";
    if (g.witness)
      os << g.witness->first << ',' << g.witness->second << '\n';
    else
      os << "none\n";
    os << "gray.params: " << binary_params_string(g) << '\n';
  }
  os << "methods.closed_form: " << detail::yes_no(r.methods.closed_form) << '\n';
  os << "methods.brute_force: " << detail::yes_no(r.methods.brute_force) << '\n';
  os << "methods.fast_path: " << detail::yes_no(r.methods.fast_path) << '\n';
  os << "methods.enumerated_size: " << detail::yes_no(r.methods.enumerated_size) << '\n';
  os << "methods.agree: " << detail::yes_no(r.methods.agree) << '\n';
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  write_text(os, r);
  return os.str();
}

/// Parses the output of write_text. Derived lines (quaternary_params,
/// gray.params) are checked against the fields they restate.
inline AnalysisReport parse_text(std::istream& is) {
  AnalysisReport r;
  GrayImageReport g;
  bool have_gray = false;
  std::string line;
  std::string quaternary_line, params_line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw ParameterError("malformed report line '" + line + "'");
    const std::string key = line.substr(0, colon);
    const std::string val = line.substr(colon + 2);
    auto yes = [&] { return val == "yes"; };
    if (key == "n") r.spec.poset.n = std::stoi(val);
    else if (key == "m") r.spec.poset.m = std::stoi(val);
    else if (key == "ideal") {
      const auto open = val.find('(');
      r.spec.kind = detail::parse_kind(val.substr(0, open));
      const std::string args = val.substr(open + 1, val.size() - open - 2);
      if (r.spec.kind == IdealKind::ChainOne) r.spec.i = std::stoi(args);
      else if (r.spec.kind == IdealKind::ChainTwo) r.spec.j = std::stoi(args);
      else {
        const auto comma = args.find(',');
        r.spec.i = std::stoi(args.substr(0, comma));
        r.spec.j = std::stoi(args.substr(comma + 1));
      }
    } else if (key == "length") r.length = std::stoull(val);
    else if (key == "size") r.size = std::stoull(val);
    else if (key == "kernel_size") r.kernel_size = std::stoull(val);
    else if (key == "lee_multiplicity") r.lee_multiplicity = detail::weight_map_from_text(val);
    else if (key == "lee_distinct") r.lee_distinct = detail::weight_map_from_text(val);
    else if (key == "quaternary_params") quaternary_line = val;
    else if (key == "gray.binary_length") { g.binary_length = std::stoull(val); have_gray = true; }
    else if (key == "gray.binary_size") g.binary_size = std::stoull(val);
    else if (key == "gray.min_distance") g.min_distance = std::stoull(val);
    else if (key == "gray.linear") g.is_linear = yes();
    else if (key == "gray.witness") {
      if (val != "none") {
        const auto comma = val.find(',');
        g.witness = std::pair{std::stoi(val.substr(0, comma)), std::stoi(val.substr(comma + 1))};
      }
    } else if (key == "gray.params") params_line = val;
    else if (key == "methods.closed_form") r.methods.closed_form = yes();
    else if (key == "methods.brute_force") r.methods.brute_force = yes();
    else if (key == "methods.fast_path") r.methods.fast_path = yes();
    else if (key == "methods.enumerated_size") r.methods.enumerated_size = yes();
    else if (key == "methods.agree") r.methods.agree = yes();
    else throw ParameterError("unknown report key '" + key + "'");
  }
  if (have_gray) r.gray = g;

  // quaternary_params restates length and size; d is only carried here.
  {
    std::string digits;
    for (char c : quaternary_line) digits.push_back(std::isdigit(static_cast<unsigned char>(c)) ? c : ' ');
    std::istringstream qs(digits);
    if (!(qs >> r.quaternary.length >> r.quaternary.size >> r.quaternary.min_distance))
      throw ParameterError("malformed quaternary_params '" + quaternary_line + "'");
  }
  if (r.gray && params_line != binary_params_string(*r.gray))
    throw ParameterError("gray.params '" + params_line + "' disagrees with the gray fields");
  return r;
}

inline AnalysisReport parse_text(const std::string& s) {
  std::istringstream is(s);
  return parse_text(is);
}

}  // namespace z4poset
