#pragma once

// Intersection numbers on a ppav of dimension g: Chern classes of theta
// divisors and their intersections as polynomials in h = c_1(L), Hodge numbers
// of the genus-4 surfaces Y and Y+, quadric Betti numbers and the Schottky
// stratum data.

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "thetacalc/lie_core.hpp"

namespace thetacalc {

using Rational = boost::rational<long long>;

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Polynomial in h truncated above degree g, evaluated by deg_X(h^g) = g!.
class ChernEvaluation {
 public:
  explicit ChernEvaluation(int g, std::vector<Rational> coef = {}) : g_(g), coef_(std::move(coef)) {
    if (g < 1) throw InputError("dimension must be positive");
    coef_.resize(static_cast<std::size_t>(g) + 1, Rational(0));
  }

  static ChernEvaluation one(int g) { return monomial(g, 0, Rational(1)); }
  static ChernEvaluation monomial(int g, int k, Rational c) {
    ChernEvaluation p(g);
    if (k <= g) p.coef_[static_cast<std::size_t>(k)] = c;
    return p;
  }
  /// (1 + h)^n for any integer n, truncated.
  static ChernEvaluation one_plus_h_pow(int g, int n) {
    ChernEvaluation p(g);
    Rational c(1);
    for (int k = 0; k <= g; ++k) {
      p.coef_[static_cast<std::size_t>(k)] = c;
      c = c * Rational(n - k, k + 1);  // generalized binomial coefficient
    }
    return p;
  }

  int dimension() const { return g_; }
  Rational coefficient(int k) const { return k < 0 || k > g_ ? Rational(0) : coef_[static_cast<std::size_t>(k)]; }

  friend ChernEvaluation operator*(const ChernEvaluation& a, const ChernEvaluation& b) {
    if (a.g_ != b.g_) throw InputError("Chern polynomials over different dimensions");
    ChernEvaluation p(a.g_);
    for (int i = 0; i <= a.g_; ++i)
      for (int j = 0; i + j <= a.g_; ++j) p.coef_[static_cast<std::size_t>(i + j)] += a.coefficient(i) * b.coefficient(j);
    return p;
  }

  /// Degree-k part.
  ChernEvaluation part(int k) const { return monomial(g_, k, coefficient(k)); }

  /// deg_X of the top-degree part.
  Rational degree_on_x() const { return coefficient(g_) * Rational(factorial(g_)); }

  /// Degree on a complete intersection of `codim` divisors of class h:
  /// deg_Z(a) = deg_X(a h^codim).
  Rational degree_on(int codim) const { return (*this * monomial(g_, codim, Rational(1))).degree_on_x(); }

 private:
  int g_;
  std::vector<Rational> coef_;
};

inline long long to_integer(const Rational& r, const char* what) {
  if (r.denominator() != 1) throw InvariantViolation("integrality", std::string(what) + " is not an integer");
  return r.numerator();
}

/// chi(delta_Theta) = (-1)^(g-1) chi_top(Theta), with c(T_Theta) = (1+h)^-1.
inline long long theta_chi(int g) {
  if (g < 2) throw InputError("theta_chi needs g >= 2");
  const auto c = ChernEvaluation::one_plus_h_pow(g, -1);
  const long long top = to_integer(c.part(g - 1).degree_on(1), "chi_top(Theta)");
  return (g - 1) % 2 ? -top : top;
}

/// Each ordinary double point lowers chi(delta_Theta) by two.
inline long long theta_chi_odp(int g, int r) {
  if (g < 4) throw InputError("theta_chi_odp needs g >= 4");
  if (r < 0) throw InputError("number of double points must be non-negative");
  return theta_chi(g) - 2LL * r;
}

// ---------------------------------------------------------------------------
// Hodge numbers of Y = Theta_x cap Theta_-x and Y+ = Y / sigma in genus 4
// ---------------------------------------------------------------------------

struct HodgeRow {
  long long h20 = 0;  // = h02
  long long h11 = 0;
  long long h10 = 0;  // = h01

  long long h2() const { return 2 * h20 + h11; }
  friend bool operator==(const HodgeRow&, const HodgeRow&) = default;
};

struct HodgeTable {
  HodgeRow x, y, y_plus;
  long long c1_squared_y = 0;
  long long c2_y = 0;
  long long chi_top_y = 0;
  long long chi_o_y = 0;
  long long chi_top_y_plus = 0;
  long long chi_o_y_plus = 0;
  HodgeRow v_plus, v_minus;  // h10 unused: the variations live in weight 2

  long long rank_v_plus() const { return v_plus.h2(); }
  long long rank_v_minus() const { return v_minus.h2(); }
};

inline HodgeTable y_hodge_table() {
  constexpr int g = 4;
  HodgeTable t;
  // H^1(Y) = H^1(X) is taken as input.
  const long long h1_y = 2 * g;

  // 1 = c(T_Y)(1 + h)^2 on Y, a complete intersection of two theta divisors.
  const auto c = ChernEvaluation::one_plus_h_pow(g, -2);
  t.c2_y = to_integer(c.part(2).degree_on(2), "c2(Y)");
  t.c1_squared_y = to_integer((c.part(1) * c.part(1)).degree_on(2), "c1^2(Y)");
  t.chi_top_y = t.c2_y;
  const Rational noether = Rational(t.c1_squared_y + t.c2_y, 12);
  t.chi_o_y = to_integer(noether, "Noether's formula");

  t.x = {g * (g - 1) / 2, g * g, g};
  t.y.h10 = h1_y / 2;
  t.y.h20 = t.chi_o_y - 1 + t.y.h10;  // chi(O) = 1 - h01 + h02
  const long long h2_y = t.chi_top_y - 2 + 2 * h1_y;
  t.y.h11 = h2_y - 2 * t.y.h20;

  // Y -> Y+ is an etale double cover; sigma acts on H^1 by -1.
  if (t.chi_top_y % 2 || t.chi_o_y % 2) throw InvariantViolation("integrality", "etale double cover halves chi");
  t.chi_top_y_plus = t.chi_top_y / 2;
  t.chi_o_y_plus = t.chi_o_y / 2;
  t.y_plus.h10 = 0;
  t.y_plus.h20 = t.chi_o_y_plus - 1;
  t.y_plus.h11 = (t.chi_top_y_plus - 2) - 2 * t.y_plus.h20;

  t.v_plus = {t.y.h20 - t.y_plus.h20, t.y.h11 - t.y_plus.h11, 0};
  t.v_minus = {t.y_plus.h20 - t.x.h20, t.y_plus.h11 - t.x.h11, 0};
  return t;
}

// ---------------------------------------------------------------------------
// Ordinary double points
// ---------------------------------------------------------------------------

/// Betti numbers b_0..b_2m of a smooth quadric of dimension m.
inline std::vector<int> quadric_betti(int m) {
  if (m < 1) throw InputError("quadric dimension must be >= 1");
  const int d = m + 1;
  const int delta = d % 2;
  std::vector<int> b(static_cast<std::size_t>(2 * m + 1), 0);
  for (int j = 0; j <= 2 * m; j += 2) b[static_cast<std::size_t>(j)] = 1;
  b[static_cast<std::size_t>(m)] = 2 * delta;
  return b;
}

struct Skyscraper {
  int twist;
  friend bool operator==(const Skyscraper&, const Skyscraper&) = default;
};

/// Vanishing-cycle summands at n ordinary double points of a d-dimensional
/// hypersurface: skyscrapers twisted by -(d-1)/2 for odd d, nothing for even d.
inline std::vector<Skyscraper> psi_summands(int d, int n) {
  if (d < 1 || n < 0) throw InputError("psi_summands needs d >= 1 and n >= 0");
  if (d % 2 == 0) return {};
  return std::vector<Skyscraper>(static_cast<std::size_t>(n), Skyscraper{-(d - 1) / 2});
}

inline long long two_torsion_on_theta(int g) {
  if (g < 1 || g > 30) throw InputError("genus out of range");
  return (1LL << (g - 1)) * ((1LL << g) - 1);
}

// ---------------------------------------------------------------------------
// Strata of A_4
// ---------------------------------------------------------------------------

struct StratumInfo {
  std::string id;
  std::string locus;
  std::string group;  // empty when no group is recorded
  bool conjectural = false;
  std::optional<IrrepLabel> defining;
  std::optional<long long> chi;
  std::optional<int> double_points;
  std::string singularities;
};

inline const std::vector<StratumInfo>& schottky_strata() {
  static const std::vector<StratumInfo> table = [] {
    std::vector<StratumInfo> t;
    t.push_back({"smooth", "A4 \\ N4", "Sp(24)", false,
                 IrrepLabel(GroupSpec::C(12), standard_weight(GroupSpec::C(12))), theta_chi_odp(4, 0), 0,
                 "smooth theta divisor"});
    t.push_back({"jacobian", "J4 \\ (theta_null cap J4)", "Sl(6)/mu3", false,
                 IrrepLabel(GroupSpec({{Family::A, 5}}, "mu3"), {0, 0, 1, 0, 0}), theta_chi_odp(4, 2), 2,
                 "precisely two singularities, both ordinary double points"});
    t.push_back({"hyperelliptic", "J4,hyp \\ (J4,hyp cap A4,dec)", "Sp(6)", false, std::nullopt, std::nullopt,
                 std::nullopt, "singular locus of dimension one"});
    t.push_back({"theta-null", "theta_null \\ (theta_null cap J4)", "Sp(22)", true,
                 IrrepLabel(GroupSpec::C(11), standard_weight(GroupSpec::C(11))), theta_chi_odp(4, 1), 1,
                 "precisely one singularity, an ordinary double point"});
    t.push_back({"theta-null-jacobian", "(theta_null cap J4) \\ (J4,hyp cup A4,dec)", "", false, std::nullopt,
                 std::nullopt, std::nullopt,
                 "precisely one singularity, Hesse matrix of the theta function of rank three"});
    t.push_back({"decomposable", "A4,dec", "", false, std::nullopt, std::nullopt, std::nullopt,
                 "singular locus of dimension two"});
    return t;
  }();
  return table;
}

inline const StratumInfo& schottky_stratum(const std::string& id) {
  for (const auto& s : schottky_strata())
    if (s.id == id) return s;
  throw InputError("unknown stratum '" + id + "'");
}

}  // namespace thetacalc
