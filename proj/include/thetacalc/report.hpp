#pragma once

// Command implementations behind the CLI: every command returns a
// ReportDocument holding canonical JSON plus a human-readable rendering.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thetacalc/serialize.hpp"

namespace thetacalc {

struct ReportDocument {
  std::string command;
  Json input = Json::object();
  Json result = Json::object();
  std::string renderer;  // "package-table", "triangle", "filtration", "record"
  std::string text;      // human rendering

  Json to_json() const { return {{"command", command}, {"input", input}, {"result", result}, {"renderer", renderer}}; }
};

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

namespace detail {

/// One irreducible summand in table notation, e.g. "(1000)_s- x B"; for a
/// two-factor group the second factor is written as B, S2(B) or its label.
inline std::string summand_label(const GroupSpec& g, const Weight& w, const std::string& sigma) {
  const auto& fs = g.factors();
  if (fs.size() != 2) return "(" + format_weight(g, w) + ")" + sigma;
  const GroupSpec first({fs[0]}), second({fs[1]});
  const Weight a(w.begin(), w.begin() + fs[0].rank), b(w.begin() + fs[0].rank, w.end());
  const std::string s = "(" + format_weight(first, a) + ")" + sigma;
  Weight two = zero_weight(second);
  two[0] = 2;
  if (b == zero_weight(second)) return s;
  if (b == standard_weight(second)) return s + " x B";
  if (b == two) return s + " x S2(B)";
  return s + " x (" + format_weight(second, b) + ")";
}

inline std::string render_packages(const std::vector<LefschetzPackage>& packages, bool show_sigma) {
  std::ostringstream os;
  int last = -1;
  for (const auto& p : packages)
    for (const auto& [w, m] : p.base.terms()) {
      std::string lead = p.level != last ? "[" + std::to_string(p.level) + "]_t" : "";
      last = p.level;
      lead.resize(7, ' ');
      os << lead << summand_label(p.base.group(), w, show_sigma ? std::string("_s") + sigma_name(p.sigma) : "");
      if (m != 1) os << "  ^" << m;
      os << "\n";
    }
  return os.str();
}

inline std::string render_record(const Json& j, const std::string& indent = "") {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) os << indent << k << ":\n" << render_record(v, indent + "  ");
    else os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return os.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hypercohomology tables
// ---------------------------------------------------------------------------

inline GroupSpec table1_group() { return GroupSpec::C(4).times(GroupSpec::C(5)); }

/// H(delta_Theta) for a general ppav of dimension 4: (0000)[3] + (1000)[2] +
/// (0100)[1] + ((0010) + B)[0], with sigma = -1 on (1000) and (0010).
inline std::vector<LefschetzPackage> delta_theta_packages() {
  const GroupSpec g = table1_group();
  auto rep = [&](const std::string& w) { return VirtualRep::irrep(IrrepLabel(g, parse_weight(g, w))); };
  return {{rep("0000|00000"), Sigma::plus, 3},
          {rep("1000|00000"), Sigma::minus, 2},
          {rep("0100|00000"), Sigma::plus, 1},
          {rep("0010|00000"), Sigma::minus, 0},
          {rep("0000|10000"), Sigma::plus, 0}};
}

/// Packages of H(delta_+) and H(delta_-): super square of H(delta_Theta)
/// minus H(tau_pm), and minus the unit on the alternating side.
inline std::pair<std::vector<LefschetzPackage>, std::vector<LefschetzPackage>> table1_columns() {
  constexpr int g = 4;
  const GroupSpec group = table1_group();
  const SignedGradedRep h = expand(delta_theta_packages(), group);
  const SignedGradedRep plus = super_sym2(h) - tau_hypercohomology(g, +1, group);
  const SignedGradedRep minus = super_alt2(h) - tau_hypercohomology(g, -1, group) - SignedGradedRep::unit(group);
  return {package_decompose(plus), package_decompose(minus)};
}

inline ReportDocument cmd_table1() {
  auto [plus, minus] = table1_columns();
  ReportDocument d;
  d.command = "table1";
  d.input = {{"delta_theta", to_json(delta_theta_packages())}, {"genus", 4}};
  d.result = {{"group", table1_group().name()}, {"columns", {{"delta_plus", to_json(plus)}, {"delta_minus", to_json(minus)}}}};
  d.renderer = "package-table";
  d.text = "H(X, delta_+)\n" + detail::render_packages(plus, true) + "\nH(X, delta_-)\n" +
           detail::render_packages(minus, true);
  return d;
}

inline const std::vector<std::pair<int, int>>& table2_partitions() {
  static const std::vector<std::pair<int, int>> p{{5, 1}, {4, 2}, {3, 3}};
  return p;
}

inline std::string table2_key(int a, int b) { return "p_delta_" + std::to_string(a) + "," + std::to_string(b); }

inline ReportDocument cmd_table2() {
  ReportDocument d;
  d.command = "table2";
  d.renderer = "package-table";
  Json cols = Json::object();
  for (auto [a, b] : table2_partitions()) {
    const SignedGradedRep h = lr_delta_ab(a, b);
    const auto packages = package_decompose(h);
    cols[table2_key(a, b)] = to_json(packages);
    d.text += "H(JC, " + table2_key(a, b) + ")   chi = " + std::to_string(h.euler()) + "\n" +
              detail::render_packages(packages, false) + "\n";
  }
  d.input = {{"partitions", table2_partitions()}, {"genus", kDegenerateGenus}};
  d.result = {{"group", GroupSpec::C(kDegenerateGenus).name()}, {"columns", cols}};
  return d;
}

inline ReportDocument cmd_diagrams() {
  const auto psi = psi1_delta_diagram();
  const auto plus = psi1_delta_pm_diagram(SquareVariant::sym);
  const auto minus = psi1_delta_pm_diagram(SquareVariant::alt);
  for (const auto* x : {&psi, &plus, &minus}) x->validate();
  ReportDocument d;
  d.command = "diagrams";
  d.renderer = "triangle";
  d.result = {{"psi1_delta", to_json(psi)}, {"psi1_delta_plus", to_json(plus)}, {"psi1_delta_minus", to_json(minus)}};
  d.text = "Psi_1(delta)\n" + render_triangle(psi) + "\nPsi_1(delta_+)\n" + render_triangle(plus) +
           "\nPsi_1(delta_-)\n" + render_triangle(minus);
  return d;
}

// ---------------------------------------------------------------------------
// Thin wrappers
// ---------------------------------------------------------------------------

inline ReportDocument cmd_hodge() {
  ReportDocument d;
  d.command = "hodge";
  d.renderer = "record";
  d.result = to_json(y_hodge_table());
  d.text = detail::render_record(d.result);
  return d;
}

inline ReportDocument cmd_euler(int g, int r) {
  ReportDocument d;
  d.command = "euler";
  d.renderer = "record";
  d.input = {{"g", g}, {"double_points", r}};
  const long long chi = r == 0 ? theta_chi(g) : theta_chi_odp(g, r);
  d.result = {{"chi", chi}};
  d.text = "chi(delta_Theta) = " + std::to_string(chi) + "\n";
  return d;
}

inline ReportDocument cmd_dim(const std::string& group_name, const std::string& weight) {
  const GroupSpec g = parse_group(group_name);
  const IrrepLabel label(g, parse_weight(g, weight));
  ReportDocument d;
  d.command = "dim";
  d.renderer = "record";
  d.input = {{"group", g.name()}, {"weight", format_weight(g, label.weight)}};
  d.result = {{"dim", weyl_dim(label)}};
  d.text = "dim (" + format_weight(g, label.weight) + ") = " + std::to_string(weyl_dim(label)) + "\n";
  return d;
}

inline ReportDocument cmd_tensor(const std::string& group_name, const std::vector<std::string>& weights) {
  if (weights.empty()) throw InputError("tensor needs at least one weight");
  const GroupSpec g = parse_group(group_name);
  VirtualRep acc = VirtualRep::trivial(g);
  Json in = Json::array();
  for (const auto& w : weights) {
    const IrrepLabel label(g, parse_weight(g, w));
    in.push_back(format_weight(g, label.weight));
    acc = tensor(acc, VirtualRep::irrep(label));
  }
  ReportDocument d;
  d.command = "tensor";
  d.renderer = "record";
  d.input = {{"group", g.name()}, {"factors", in}};
  d.result = {{"rep", to_json(acc)}, {"dim", acc.dim()}};
  d.text = format_rep(acc) + "\ndim " + std::to_string(acc.dim()) + "\n";
  return d;
}

inline ReportDocument cmd_square(const std::string& group_name, const std::string& weight, SquareVariant v) {
  const GroupSpec g = parse_group(group_name);
  const IrrepLabel label(g, parse_weight(g, weight));
  const VirtualRep x = VirtualRep::irrep(label);
  const VirtualRep s = v == SquareVariant::sym ? sym2(x) : alt2(x);
  ReportDocument d;
  d.command = v == SquareVariant::sym ? "sym2" : "alt2";
  d.renderer = "record";
  d.input = {{"group", g.name()}, {"weight", format_weight(g, label.weight)}};
  d.result = {{"rep", to_json(s)}, {"dim", s.dim()}};
  d.text = format_rep(s) + "\ndim " + std::to_string(s.dim()) + "\n";
  return d;
}

inline ReportDocument cmd_nilfilt(const Json& matrix, int base_weight) {
  const RationalMatrix n = matrix_from_json(matrix);
  const FiltrationResult f = monodromy_filtration(n);
  ReportDocument d;
  d.command = "nilfilt";
  d.renderer = "filtration";
  d.input = {{"dimension", n.rows()}, {"base_weight", base_weight}};
  d.result = to_json(f);
  d.text = triangle_render(f, base_weight);
  return d;
}

inline ReportDocument cmd_stratum(const std::optional<std::string>& id) {
  ReportDocument d;
  d.command = "stratum";
  d.renderer = "record";
  if (id) {
    d.input = {{"id", *id}};
    d.result = to_json(schottky_stratum(*id));
    d.text = detail::render_record(d.result);
  } else {
    d.result = Json::array();
    for (const auto& s : schottky_strata()) {
      d.result.push_back(to_json(s));
      d.text += detail::render_record(to_json(s)) + "\n";
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Golden files
// ---------------------------------------------------------------------------

/// Golden files hold {"_note": ..., "result": <payload>}.
inline Json load_golden(const std::filesystem::path& dir, const std::string& command) {
  const auto path = dir / (command + ".json");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open golden file " + path.string());
  try {
    return Json::parse(in).at("result");
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed golden file " + path.string() + ": " + e.what());
  }
}

/// JSON-patch style differences turning the golden payload into the computed one.
inline std::vector<std::string> golden_diff(const Json& golden, const Json& computed) {
  std::vector<std::string> out;
  for (const auto& op : Json::diff(golden, computed)) {
    std::string line = op.at("op").get<std::string>() + " " + op.at("path").get<std::string>();
    if (op.contains("value")) line += " = " + op.at("value").dump();
    if (op.at("op") != "add") {
      try {
        line += "   (golden: " + golden.at(Json::json_pointer(op.at("path").get<std::string>())).dump() + ")";
      } catch (const nlohmann::json::exception&) {
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

inline bool matches_golden(const Json& golden, const Json& computed) {
  return canonical_dump(golden) == canonical_dump(computed);
}

}  // namespace thetacalc
