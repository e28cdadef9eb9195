// Acceptance runner: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs; the exit status is non-zero if any selected criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "thetacalc/report.hpp"

using namespace thetacalc;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Verdict golden_check(const std::string& name, const Json& computed) {
  Verdict v;
  const Json golden = load_golden(THETACALC_GOLDEN_DIR, name);
  if (!matches_golden(golden, computed)) {
    for (const auto& line : golden_diff(golden, computed)) v.expect(false, line);
    if (v.pass) v.expect(false, "byte mismatch");
  }
  return v;
}

Verdict table1() { return golden_check("table1", cmd_table1().result); }

Verdict table2() {
  Verdict v = golden_check("table2", cmd_table2().result);
  v.expect(lr_delta_ab(4, 2).at(1).multiplicity({1, 0, 0, 0}) - lr_delta_ab(4, 2).at(3).multiplicity({1, 0, 0, 0}) == 4,
           "(1000)^4 in [1] of p_delta_4,2");
  return v;
}

Verdict diagrams() {
  Verdict v = golden_check("diagrams", cmd_diagrams().result);
  for (auto var : {SquareVariant::sym, SquareVariant::alt})
    v.expect(psi1_delta_pm_diagram(var).weights() == std::vector<int>{4, 5, 6, 7, 8},
             std::string("weights of ") + variant_name(var));
  return v;
}

Verdict euler() {
  Verdict v;
  v.expect(theta_chi(4) == 24, "theta_chi(4) = " + str(theta_chi(4)));
  v.expect(theta_chi_odp(4, 1) == 22, "theta_chi_odp(4,1) = " + str(theta_chi_odp(4, 1)));
  v.expect(theta_chi_odp(4, 2) == 20, "theta_chi_odp(4,2) = " + str(theta_chi_odp(4, 2)));
  const Mult chi_s = euler_check(Term(SimpleLabel::of(SimpleKind::DeltaThetaS)));
  v.expect(chi_s == 20, "chi(hyper(delta_Theta_s)) = " + str(chi_s));
  v.expect(theta_jacobian_from_curve(4).euler() == 20, "peeled exterior power chi");
  const auto h = expand(delta_theta_packages(), table1_group());
  v.expect(super_sym2(h).euler() == 300, "chi(S^2) = " + str(super_sym2(h).euler()));
  v.expect(super_alt2(h).euler() == 276, "chi(Lambda^2) = " + str(super_alt2(h).euler()));
  return v;
}

Verdict hodge() {
  Verdict v;
  const auto t = y_hodge_table();
  v.expect(t.y == HodgeRow{17, 52, 4}, "Y");
  v.expect(t.y_plus == HodgeRow{6, 22, 0}, "Y+");
  v.expect(t.chi_top_y == 72, "chi_top(Y)");
  v.expect(t.chi_o_y == 14, "chi(O_Y)");
  v.expect(t.y.h2() == 86, "h2(Y)");
  v.expect(t.rank_v_plus() == 52 && t.v_plus.h20 == 11 && t.v_plus.h11 == 30, "V+");
  v.expect(t.rank_v_minus() == 6 && t.v_minus.h20 == 0 && t.v_minus.h11 == 6, "V-");
  return v;
}

Verdict jacobian_cross_check() {
  Verdict v;
  for (int g : {3, 4}) {
    const auto a = theta_jacobian_from_curve(g), b = theta_jacobian_closed_form(g);
    for (int nu = -g; nu <= g; ++nu)
      for (Sigma s : {Sigma::plus, Sigma::minus})
        v.expect(a.at(nu, s) == b.at(nu, s), "g=" + str(g) + " degree " + str(nu) + " sigma" + sigma_name(s));
    v.expect(a == b, "g=" + str(g));
  }
  return v;
}

Verdict properties() {
  Verdict v;
  const std::vector<std::pair<std::string, props::Outcome>> runs = {
      {"7a graded tensor split", props::tensor_splits(25, 1)},
      {"7b square dimensions", props::square_dimensions(50, 2)},
      {"7c trivial summand once", props::trivial_once(30, 3)},
      {"7d nilpotent filtrations", props::nilpotent_filtrations(100, 4)},
      {"7e expand/package_decompose", props::package_identity(25, 5)}};
  for (const auto& [name, o] : runs) v.expect(o.ok(), name + ": " + str(o.failures) + "/" + str(o.trials) + " failed, first " + o.first);
  return v;
}

Verdict misc() {
  Verdict v;
  v.expect(two_torsion_on_theta(4) == 120, "two torsion");
  for (int m = 1; m <= 6; ++m) {
    // the displayed case split with d = m + 1
    const int d = m + 1, delta = d % 2;
    std::vector<int> expected;
    for (int j = 0; j <= 2 * (d - 1); ++j) expected.push_back(j == d - 1 ? 2 * delta : j % 2 == 0 ? 1 : 0);
    v.expect(quadric_betti(m) == expected, "quadric_betti(" + str(m) + ")");
  }
  const auto psi = psi_summands(3, 2);
  v.expect(psi.size() == 2 && psi[0].twist == -1 && psi[1].twist == -1, "psi_summands(3,2)");
  return v;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {{1, "Table 1 reproduction", table1},
                                      {2, "Table 2 reproduction", table2},
                                      {3, "filtration diagrams", diagrams},
                                      {4, "Euler characteristics", euler},
                                      {5, "Hodge table", hodge},
                                      {6, "Jacobian closed form vs peeled exterior power", jacobian_cross_check},
                                      {7, "property suites", properties},
                                      {8, "two-torsion, quadrics, vanishing cycles", misc}};
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && v.pass;
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (v.pass ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(2) << secs << " s)";
    if (!v.pass) std::cout << "  " << v.detail;
    std::cout << "\n";
  }
  return all_pass ? 0 : 1;
}
