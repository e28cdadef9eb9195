#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetacalc/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kGoldenMismatch = 1;
constexpr int kInvariant = 2;
constexpr int kInput = 3;

thetacalc::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw thetacalc::InputError("cannot open " + path);
  try {
    return thetacalc::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw thetacalc::InputError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace thetacalc;

  CLI::App app{"Representation and intersection calculator for theta divisors of ppavs of dimension 4"};
  app.require_subcommand(1);

  bool json = false;
  std::string golden_dir;
  long long dim_cap = dimension_cap();
  app.add_flag("--json", json, "Emit the canonical JSON report");
  app.add_option("--golden-dir", golden_dir, "Compare table1/table2/diagrams against <dir>/<command>.json");
  app.add_option("--dim-cap", dim_cap, "Largest irreducible dimension whose character is expanded")->check(CLI::PositiveNumber);

  app.add_subcommand("table1", "Hypercohomology of delta_+ and delta_-");
  app.add_subcommand("table2", "Hypercohomology of p_delta_{a,b} on a genus-4 Jacobian");
  app.add_subcommand("diagrams", "Monodromy filtration diagrams of Psi_1(delta) and Psi_1(delta_+-)");
  app.add_subcommand("hodge", "Hodge numbers of Y, Y+ and the variations V_+-");

  int g = 4, r = 0;
  auto* euler = app.add_subcommand("euler", "Euler characteristic of delta_Theta");
  euler->add_option("g", g, "Dimension of the ppav")->required();
  euler->add_option("r", r, "Number of ordinary double points");

  std::string group, weight;
  auto* dim = app.add_subcommand("dim", "Weyl dimension of an irreducible representation");
  dim->add_option("group", group, "e.g. C4, Sp10, C4xC5, SL6/mu3")->required();
  dim->add_option("weight", weight, "e.g. 0010, std, 1,0,12, 0000|10000")->required();

  std::vector<std::string> factors;
  auto* tens = app.add_subcommand("tensor", "Tensor product of irreducibles");
  tens->add_option("group", group)->required();
  tens->add_option("weights", factors)->required();

  auto* s2 = app.add_subcommand("sym2", "Symmetric square of an irreducible");
  auto* a2 = app.add_subcommand("alt2", "Alternating square of an irreducible");
  for (auto* c : {s2, a2}) {
    c->add_option("group", group)->required();
    c->add_option("weight", weight)->required();
  }

  std::string matrix_file;
  int base_weight = 0;
  auto* nil = app.add_subcommand("nilfilt", "Monodromy filtration of a nilpotent rational matrix");
  nil->add_option("matrix", matrix_file, "JSON array of rows of \"p/q\" strings")->required();
  nil->add_option("--base-weight", base_weight, "Weight of Gr_0 in the rendered triangle");

  std::string stratum_id;
  auto* strat = app.add_subcommand("stratum", "Group and Euler characteristic data of a stratum of A_4");
  strat->add_option("id", stratum_id, "smooth, jacobian, hyperelliptic, theta-null, theta-null-jacobian, decomposable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    set_dimension_cap(dim_cap);
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    ReportDocument doc;
    if (name == "table1") doc = cmd_table1();
    else if (name == "table2") doc = cmd_table2();
    else if (name == "diagrams") doc = cmd_diagrams();
    else if (name == "hodge") doc = cmd_hodge();
    else if (name == "euler") doc = cmd_euler(g, r);
    else if (name == "dim") doc = cmd_dim(group, weight);
    else if (name == "tensor") doc = cmd_tensor(group, factors);
    else if (name == "sym2") doc = cmd_square(group, weight, SquareVariant::sym);
    else if (name == "alt2") doc = cmd_square(group, weight, SquareVariant::alt);
    else if (name == "nilfilt") doc = cmd_nilfilt(read_json_file(matrix_file), base_weight);
    else if (name == "stratum") doc = cmd_stratum(stratum_id.empty() ? std::nullopt : std::optional(stratum_id));

    std::cout << (json ? canonical_dump(doc.to_json()) : doc.text);

    if (!golden_dir.empty() && (name == "table1" || name == "table2" || name == "diagrams")) {
      const Json golden = load_golden(golden_dir, name);
      if (!matches_golden(golden, doc.result)) {
        std::cerr << name << ": result differs from golden file\n";
        for (const auto& line : golden_diff(golden, doc.result)) std::cerr << "  " << line << "\n";
        return kGoldenMismatch;
      }
      std::cerr << name << ": matches golden file\n";
    }
    return kOk;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated [" << e.invariant() << "]: " << e.what() << "\n";
    return kInvariant;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << " (raise --dim-cap)\n";
    return kInput;
  }
}
