#pragma once

// Canonical JSON forms (sorted keys, integer multiplicities) and the textual
// parsers for group names and weights used on the command line.

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetacalc/geom_numbers.hpp"
#include "thetacalc/graded_super.hpp"
#include "thetacalc/nilfilt.hpp"
#include "thetacalc/perv_calc.hpp"
#include "thetacalc/repcalc.hpp"

namespace thetacalc {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline int parse_int(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError("expected a non-negative integer in '" + context + "', got '" + s + "'");
  return std::stoi(s);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline Factor parse_factor(std::string s) {
  const std::string orig = s;
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  std::string head, digits;
  std::size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) head += static_cast<char>(std::toupper(s[i++]));
  digits = s.substr(i);
  const int n = parse_int(digits, orig);
  if (head == "A" || head == "B" || head == "C" || head == "D") {
    const Family f = head == "A" ? Family::A : head == "B" ? Family::B : head == "C" ? Family::C : Family::D;
    return {f, n};
  }
  // Matrix-group names: the number is the size of the defining representation.
  if (head == "SP") {
    if (n % 2) throw InputError("Sp needs an even size in '" + orig + "'");
    return {Family::C, n / 2};
  }
  if (head == "SL") return {Family::A, n - 1};
  if (head == "SO") return n % 2 ? Factor{Family::B, (n - 1) / 2} : Factor{Family::D, n / 2};
  throw InputError("unknown group '" + orig + "'");
}

}  // namespace detail

/// "C4", "C4xC5", "Sp(8)xSp(10)", "SL6/mu3", "SO8".
inline GroupSpec parse_group(const std::string& text) {
  if (text.empty()) throw InputError("empty group name");
  std::string body = text, isogeny;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    body = text.substr(0, slash);
    isogeny = text.substr(slash + 1);
    if (isogeny.empty()) throw InputError("empty isogeny in '" + text + "'");
  }
  std::vector<Factor> factors;
  for (const auto& part : detail::split(body, 'x')) {
    if (part.empty()) throw InputError("empty factor in '" + text + "'");
    factors.push_back(detail::parse_factor(part));
  }
  return GroupSpec(std::move(factors), isogeny);
}

/// Compact digits per factor ("0010"), a comma form ("1,0,12"), factors joined
/// by '|'. "std" names the standard representation of the first factor and
/// "0" the trivial one.
inline Weight parse_weight(const GroupSpec& group, const std::string& text) {
  std::string s = text;
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  if (s == "std" || s == "0" || s == "trivial") {
    Weight w = zero_weight(group);
    if (s == "std") w[0] = 1;
    return w;
  }
  const auto parts = detail::split(s, '|');
  const auto& fs = group.factors();
  if (parts.size() != fs.size())
    throw InputError("weight '" + text + "' has " + std::to_string(parts.size()) + " factor(s), group " + group.name() +
                     " has " + std::to_string(fs.size()));
  Weight w;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> entries;
    if (parts[i].find(',') != std::string::npos) {
      for (const auto& e : detail::split(parts[i], ',')) entries.push_back(detail::parse_int(e, text));
    } else {
      for (char c : parts[i]) entries.push_back(detail::parse_int(std::string(1, c), text));
    }
    if (static_cast<int>(entries.size()) != fs[i].rank)
      throw InputError("factor " + fs[i].name() + " of '" + text + "' needs " + std::to_string(fs[i].rank) +
                       " entries, got " + std::to_string(entries.size()));
    w.insert(w.end(), entries.begin(), entries.end());
  }
  return w;
}

inline Sigma parse_sigma(const std::string& s) {
  if (s == "+") return Sigma::plus;
  if (s == "-") return Sigma::minus;
  throw InputError("sigma must be '+' or '-', got '" + s + "'");
}

// ---------------------------------------------------------------------------
// VirtualRep, SignedGradedRep, packages
// ---------------------------------------------------------------------------

inline Json to_json(const VirtualRep& v) {
  Json j = Json::object();
  for (const auto& [w, m] : v.terms()) j[format_weight(v.group(), w)] = m;
  return j;
}

inline VirtualRep rep_from_json(const GroupSpec& group, const Json& j) {
  if (!j.is_object()) throw InputError("representation must be a JSON object");
  VirtualRep v(group);
  for (const auto& [k, m] : j.items()) {
    if (!m.is_number_integer()) throw InputError("multiplicity of '" + k + "' is not an integer");
    v += VirtualRep::irrep(IrrepLabel(group, parse_weight(group, k)), m.get<Mult>());
  }
  return v;
}

inline Json to_json(const SignedGradedRep& g) {
  Json parts = Json::array();
  for (const auto& [d, bysigma] : g.entries())
    for (const auto& [s, v] : bysigma) parts.push_back({{"degree", d}, {"sigma", sigma_name(s)}, {"rep", to_json(v)}});
  return {{"group", g.group().name()}, {"parts", parts}};
}

inline SignedGradedRep graded_from_json(const Json& j) {
  try {
    SignedGradedRep g(parse_group(j.at("group").get<std::string>()));
    for (const auto& p : j.at("parts"))
      g.add(p.at("degree").get<int>(), parse_sigma(p.at("sigma").get<std::string>()), rep_from_json(g.group(), p.at("rep")));
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graded representation: ") + e.what());
  }
}

inline Json to_json(const std::vector<LefschetzPackage>& packages) {
  Json a = Json::array();
  for (const auto& p : packages) a.push_back({{"level", p.level}, {"sigma", sigma_name(p.sigma)}, {"rep", to_json(p.base)}});
  return a;
}

inline std::vector<LefschetzPackage> packages_from_json(const GroupSpec& group, const Json& a) {
  try {
    std::vector<LefschetzPackage> out;
    for (const auto& p : a)
      out.push_back({rep_from_json(group, p.at("rep")), parse_sigma(p.at("sigma").get<std::string>()), p.at("level").get<int>()});
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed package list: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Formal objects and filtration diagrams
// ---------------------------------------------------------------------------

inline Json to_json(const FormalObject& o) {
  Json a = Json::array();
  for (const auto& [t, m] : o.terms()) a.push_back({{"object", t.label()}, {"twist", t.twist}, {"mult", m}});
  return a;
}

inline FormalObject formal_from_json(const Json& a) {
  try {
    FormalObject o;
    for (const auto& t : a) {
      std::vector<SimpleLabel> factors;
      for (const auto& f : detail::split(t.at("object").get<std::string>(), '*')) factors.push_back(parse_simple(f));
      o.add(Term(std::move(factors), t.at("twist").get<int>()), t.at("mult").get<Mult>());
    }
    return o;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed formal object: ") + e.what());
  }
}

inline Json to_json(const FiltrationDiagram& d) {
  Json rows = Json::array();
  for (auto it = d.rows.rbegin(); it != d.rows.rend(); ++it)
    rows.push_back({{"gr", it->first}, {"weight", d.weight_of(it->first)}, {"terms", to_json(it->second)}});
  return {{"base_weight", d.base_weight}, {"weights", d.weights()}, {"rows", rows}};
}

inline FiltrationDiagram diagram_from_json(const Json& j) {
  try {
    FiltrationDiagram d;
    d.base_weight = j.at("base_weight").get<int>();
    for (const auto& r : j.at("rows")) d.rows[r.at("gr").get<int>()] = formal_from_json(r.at("terms"));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed diagram: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Nilpotent filtrations
// ---------------------------------------------------------------------------

inline Json to_json(const FiltrationResult& f) {
  Json gr = Json::array(), prim = Json::array();
  for (auto it = f.gr.rbegin(); it != f.gr.rend(); ++it) gr.push_back({{"i", it->first}, {"dim", it->second}});
  for (const auto& [k, d] : f.primitive) prim.push_back({{"k", k}, {"dim", d}});
  return {{"dimension", f.dimension}, {"jordan_blocks", f.jordan_blocks}, {"gr", gr}, {"primitive", prim}};
}

inline FiltrationResult filtration_from_json(const Json& j) {
  try {
    FiltrationResult f;
    f.dimension = j.at("dimension").get<int>();
    f.jordan_blocks = j.at("jordan_blocks").get<std::vector<int>>();
    for (const auto& e : j.at("gr")) f.gr[e.at("i").get<int>()] = e.at("dim").get<int>();
    for (const auto& e : j.at("primitive")) f.primitive[e.at("k").get<int>()] = e.at("dim").get<int>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed filtration: ") + e.what());
  }
}

/// Square matrix from a JSON array of rows; entries are "p/q" strings or integers.
inline RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be a JSON array of rows");
  const std::size_t n = j.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != n)
      throw InputError("row " + std::to_string(i) + " of the matrix must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = row[c];
      if (e.is_string()) m(i, c) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer()) m(i, c) = BigRational(e.get<long long>());
      else throw InputError("entry (" + std::to_string(i) + "," + std::to_string(c) + ") is neither a rational string nor an integer");
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

inline Json to_json(const HodgeRow& r) { return {{"h20", r.h20}, {"h11", r.h11}, {"h10", r.h10}, {"h2", r.h2()}}; }

inline Json to_json(const HodgeTable& t) {
  return {{"X", to_json(t.x)},
          {"Y", to_json(t.y)},
          {"Y_plus", to_json(t.y_plus)},
          {"c1_squared_Y", t.c1_squared_y},
          {"c2_Y", t.c2_y},
          {"chi_top_Y", t.chi_top_y},
          {"chi_O_Y", t.chi_o_y},
          {"chi_top_Y_plus", t.chi_top_y_plus},
          {"chi_O_Y_plus", t.chi_o_y_plus},
          {"V_plus", {{"h20", t.v_plus.h20}, {"h11", t.v_plus.h11}, {"rank", t.rank_v_plus()}}},
          {"V_minus", {{"h20", t.v_minus.h20}, {"h11", t.v_minus.h11}, {"rank", t.rank_v_minus()}}}};
}

inline Json to_json(const StratumInfo& s) {
  Json j = {{"id", s.id}, {"locus", s.locus}, {"conjectural", s.conjectural}, {"singularities", s.singularities}};
  j["group"] = s.group.empty() ? Json(nullptr) : Json(s.group);
  j["chi"] = s.chi ? Json(*s.chi) : Json(nullptr);
  j["double_points"] = s.double_points ? Json(*s.double_points) : Json(nullptr);
  if (s.defining) {
    j["defining_rep"] = {{"group", s.defining->group.name()},
                         {"weight", format_weight(s.defining->group, s.defining->weight)},
                         {"dim", weyl_dim(*s.defining)}};
  } else {
    j["defining_rep"] = nullptr;
  }
  return j;
}

/// Stable text form: two-space indentation, sorted keys, trailing newline.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace thetacalc
