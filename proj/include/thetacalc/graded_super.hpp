#pragma once

// Cohomologically graded representations carrying a sign for the inversion
// involution sigma: super squares and exterior powers, hard-Lefschetz
// packages, and removal of translation-invariant summands delta_X[mu].

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thetacalc/repcalc.hpp"

namespace thetacalc {

enum class Sigma : int { plus = 1, minus = -1 };

inline Sigma operator*(Sigma a, Sigma b) {
  return static_cast<int>(a) * static_cast<int>(b) == 1 ? Sigma::plus : Sigma::minus;
}
inline Sigma sigma_pow(Sigma s, int k) { return (s == Sigma::minus && k % 2) ? Sigma::minus : Sigma::plus; }
inline Sigma sigma_parity(int k) { return k % 2 ? Sigma::minus : Sigma::plus; }
inline const char* sigma_name(Sigma s) { return s == Sigma::plus ? "+" : "-"; }

/// degree -> sigma -> virtual representation.
class SignedGradedRep {
 public:
  using Entries = std::map<int, std::map<Sigma, VirtualRep>>;

  SignedGradedRep() = default;
  explicit SignedGradedRep(GroupSpec group) : group_(std::move(group)) {}

  static SignedGradedRep single(int degree, Sigma s, const VirtualRep& v) {
    SignedGradedRep g(v.group());
    g.add(degree, s, v);
    return g;
  }
  static SignedGradedRep unit(const GroupSpec& group) {
    return single(0, Sigma::plus, VirtualRep::trivial(group));
  }

  const GroupSpec& group() const { return group_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  VirtualRep at(int degree, Sigma s) const {
    if (auto it = entries_.find(degree); it != entries_.end())
      if (auto jt = it->second.find(s); jt != it->second.end()) return jt->second;
    return VirtualRep(group_);
  }

  /// Both sigma parts of one degree, summed.
  VirtualRep at(int degree) const { return at(degree, Sigma::plus) + at(degree, Sigma::minus); }

  void add(int degree, Sigma s, const VirtualRep& v) {
    if (v.empty()) return;
    if (group_.factors().empty()) group_ = v.group();
    require_same_group(group_, v.group());
    auto& slot = entries_[degree];
    auto [it, inserted] = slot.try_emplace(s, v);
    if (!inserted) it->second += v;
    if (it->second.empty()) slot.erase(it);
    if (slot.empty()) entries_.erase(degree);
  }

  SignedGradedRep& operator+=(const SignedGradedRep& o) {
    for (const auto& [d, parts] : o.entries_)
      for (const auto& [s, v] : parts) add(d, s, v);
    return *this;
  }
  SignedGradedRep& operator-=(const SignedGradedRep& o) {
    for (const auto& [d, parts] : o.entries_)
      for (const auto& [s, v] : parts) add(d, s, -v);
    return *this;
  }
  friend SignedGradedRep operator+(SignedGradedRep a, const SignedGradedRep& b) { return a += b; }
  friend SignedGradedRep operator-(SignedGradedRep a, const SignedGradedRep& b) { return a -= b; }

  friend bool operator==(const SignedGradedRep& a, const SignedGradedRep& b) { return a.entries_ == b.entries_; }

  int min_degree() const { return entries_.empty() ? 0 : entries_.begin()->first; }
  int max_degree() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  /// Sum of dimensions over all degrees.
  Mult total_dim() const {
    Mult d = 0;
    for (const auto& [deg, parts] : entries_)
      for (const auto& [s, v] : parts) d += v.dim();
    return d;
  }

  /// Alternating sum over degrees.
  Mult euler() const {
    Mult d = 0;
    for (const auto& [deg, parts] : entries_)
      for (const auto& [s, v] : parts) d += (deg % 2 ? -1 : 1) * v.dim();
    return d;
  }

  bool effective() const {
    for (const auto& [deg, parts] : entries_)
      for (const auto& [s, v] : parts)
        if (!v.effective()) return false;
    return true;
  }

  bool degree_symmetric() const {
    for (const auto& [deg, parts] : entries_) {
      auto it = entries_.find(-deg);
      if (it == entries_.end() || it->second != parts) return false;
    }
    return true;
  }

  /// Same object with every summand moved to sigma = +.
  SignedGradedRep sigma_blind() const {
    SignedGradedRep out(group_);
    for (const auto& [deg, parts] : entries_)
      for (const auto& [s, v] : parts) out.add(deg, Sigma::plus, v);
    return out;
  }

  /// Applies `f` to every summand (same degree and sign).
  template <class F>
  SignedGradedRep map_reps(F&& f, const GroupSpec& target) const {
    SignedGradedRep out(target);
    for (const auto& [deg, parts] : entries_)
      for (const auto& [s, v] : parts) out.add(deg, s, f(v));
    return out;
  }

 private:
  GroupSpec group_;
  Entries entries_;
};

// ---------------------------------------------------------------------------
// Lefschetz packages
// ---------------------------------------------------------------------------

struct LefschetzPackage {
  VirtualRep base;
  Sigma sigma = Sigma::plus;
  int level = 0;

  friend bool operator==(const LefschetzPackage&, const LefschetzPackage&) = default;
};

inline SignedGradedRep expand(const std::vector<LefschetzPackage>& packages, const GroupSpec& group) {
  SignedGradedRep out(group);
  for (const auto& p : packages) {
    if (p.level < 0) throw InputError("package level must be non-negative");
    for (int d = -p.level; d <= p.level; d += 2) out.add(d, p.sigma, p.base);
  }
  return out;
}

/// Packages ordered by decreasing level, sigma+ before sigma-.
inline std::vector<LefschetzPackage> package_decompose(const SignedGradedRep& g) {
  if (!g.degree_symmetric()) throw Asymmetric("graded object is not symmetric under degree negation");
  std::vector<LefschetzPackage> out;
  for (int n = g.max_degree(); n >= 0; --n)
    for (Sigma s : {Sigma::plus, Sigma::minus}) {
      VirtualRep diff = g.at(n, s) - g.at(n + 2, s);
      if (diff.empty()) continue;
      if (!diff.effective())
        throw NegativePeel("multiplicity grows from degree " + std::to_string(n) + " to " + std::to_string(n + 2) +
                           " (sigma" + sigma_name(s) + "): " + format_rep(diff));
      out.push_back({std::move(diff), s, n});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Graded tensor algebra
// ---------------------------------------------------------------------------

inline SignedGradedRep graded_tensor(const SignedGradedRep& a, const SignedGradedRep& b) {
  if (a.empty()) return SignedGradedRep(a.group());
  if (b.empty()) return SignedGradedRep(b.group());
  require_same_group(a.group(), b.group());
  SignedGradedRep out(a.group());
  for (const auto& [d1, p1] : a.entries())
    for (const auto& [s1, v1] : p1)
      for (const auto& [d2, p2] : b.entries())
        for (const auto& [s2, v2] : p2) out.add(d1 + d2, s1 * s2, tensor(v1, v2));
  return out;
}

namespace detail {

inline SignedGradedRep super_square(const SignedGradedRep& g, bool symmetric) {
  SignedGradedRep out(g.group());
  std::vector<std::pair<std::pair<int, Sigma>, const VirtualRep*>> slots;
  for (const auto& [d, parts] : g.entries())
    for (const auto& [s, v] : parts) slots.push_back({{d, s}, &v});
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto [d, s] = slots[i].first;
    for (std::size_t j = i + 1; j < slots.size(); ++j) {
      const auto [d2, s2] = slots[j].first;
      out.add(d + d2, s * s2, tensor(*slots[i].second, *slots[j].second));
    }
    const bool even = d % 2 == 0;
    out.add(2 * d, Sigma::plus, (symmetric == even) ? sym2(*slots[i].second) : alt2(*slots[i].second));
  }
  return out;
}

}  // namespace detail

/// Symmetric square with Koszul signs: odd degrees swap S^2 and Lambda^2.
inline SignedGradedRep super_sym2(const SignedGradedRep& g) { return detail::super_square(g, true); }
inline SignedGradedRep super_alt2(const SignedGradedRep& g) { return detail::super_square(g, false); }

/// a-th super exterior power: Lambda^k on even degrees, S^k on odd degrees.
inline SignedGradedRep super_ext(int a, const SignedGradedRep& g) {
  if (a < 0) throw InputError("super exterior power needs a >= 0");
  const GroupSpec& group = g.group();
  if (a == 0) return SignedGradedRep::unit(group);
  std::vector<std::tuple<int, Sigma, const VirtualRep*>> slots;
  for (const auto& [d, parts] : g.entries())
    for (const auto& [s, v] : parts) slots.emplace_back(d, s, &v);

  // powers[i][k] = k-th (super) power of slot i
  std::vector<std::vector<VirtualRep>> powers(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& [d, s, v] = slots[i];
    for (int k = 0; k <= a; ++k)
      powers[i].push_back(d % 2 == 0 ? exterior_power(*v, k) : symmetric_power(*v, k));
  }

  SignedGradedRep out(group);
  auto rec = [&](auto&& self, std::size_t i, int left, int deg, Sigma sign, const VirtualRep& acc) -> void {
    if (i == slots.size()) {
      if (left == 0) out.add(deg, sign, acc);
      return;
    }
    const auto& [d, s, v] = slots[i];
    for (int k = 0; k <= left; ++k) {
      const VirtualRep& p = powers[i][k];
      if (p.empty()) continue;
      self(self, i + 1, left - k, deg + k * d, sign * sigma_pow(s, k), k == 0 ? acc : tensor(acc, p));
    }
  };
  rec(rec, 0, a, 0, Sigma::plus, VirtualRep::trivial(group));
  return out;
}

// ---------------------------------------------------------------------------
// Translation-invariant summands
// ---------------------------------------------------------------------------

/// Whether sigma-signs are carried through the delta_X[mu] pattern.
/// `ignored` collapses every summand to sigma+ first.
enum class SigmaMode { tracked, ignored };

using SigmaSplit = std::map<Sigma, VirtualRep>;

/// coef (x) H(delta_X[mu]): Lambda^{nu+mu+g} in degree nu for -g-mu <= nu <= g-mu,
/// with sigma acting on Lambda^j by (-1)^j in tracked mode.
inline SignedGradedRep shifted_constant(const GroupSpec& group, int genus, int mu, const SigmaSplit& coef,
                                        SigmaMode mode = SigmaMode::tracked) {
  SignedGradedRep out(group);
  for (int nu = -genus - mu; nu <= genus - mu; ++nu) {
    const int j = nu + mu + genus;
    const VirtualRep lam = standard_exterior(group, j);
    for (const auto& [s, v] : coef) {
      const Sigma sign = mode == SigmaMode::tracked ? s * sigma_parity(j) : s;
      out.add(nu, sign, tensor(v, lam));
    }
  }
  return out;
}

/// Hypercohomology of the translation-invariant part tau_+ (parity +1) or
/// tau_- (parity -1) of the convolution square of the theta sheaf.
inline SignedGradedRep tau_hypercohomology(int genus, int parity, const GroupSpec& group) {
  if (genus < 2) throw InputError("tau needs genus >= 2");
  if (parity != 1 && parity != -1) throw InputError("parity must be +1 or -1");
  SignedGradedRep out(group);
  for (int mu = -(genus - 2); mu <= genus - 2; ++mu) {
    const bool odd = (mu % 2) != 0;
    if (odd != (parity == 1)) continue;
    const int k = genus - 2 - std::abs(mu);
    out += shifted_constant(group, genus, mu, {{sigma_parity(k), standard_exterior(group, k)}});
  }
  return out;
}

inline SignedGradedRep tau_hypercohomology(int genus, int parity) {
  return tau_hypercohomology(genus, parity, GroupSpec::C(genus));
}

struct PeelResult {
  SignedGradedRep core;
  std::map<int, SigmaSplit> shifts;
};

/// Removes summands coef (x) delta_X[+-mu] until nothing is left in degrees
/// |nu| >= genus, reading each coefficient off the lowest unexplained degree.
inline PeelResult peel_constants(const SignedGradedRep& input, int genus, SigmaMode mode = SigmaMode::tracked) {
  PeelResult r{mode == SigmaMode::ignored ? input.sigma_blind() : input, {}};
  SignedGradedRep& g = r.core;
  while (!g.empty() && g.min_degree() <= -genus) {
    const int nu = g.min_degree();
    const int mu = -genus - nu;
    SigmaSplit coef;
    for (const auto& [s, v] : g.entries().at(nu)) coef.emplace(s, v);
    r.shifts[mu] = coef;
    g -= shifted_constant(g.group(), genus, mu, coef, mode);
    if (mu > 0) g -= shifted_constant(g.group(), genus, -mu, coef, mode);
  }
  if (!g.empty() && g.max_degree() >= genus)
    throw InconsistentPeel("residue in degree " + std::to_string(g.max_degree()) + ": " +
                           format_rep(g.at(g.max_degree())));
  if (input.effective() && !g.effective()) throw InconsistentPeel("peeling produced negative multiplicities");
  return r;
}

// ---------------------------------------------------------------------------
// Curves and their Jacobians
// ---------------------------------------------------------------------------

/// H(JC, delta_C) for a curve of genus g: trivial in degrees -1 and +1, the
/// standard representation of Sp(2g) in degree 0. In tracked mode the signs
/// are (+, -, -); delta_C itself carries no sigma-action, these are the
/// signs that reproduce the evaluation-map action in degrees <= 0.
inline SignedGradedRep curve_hypercohomology(int genus, SigmaMode mode) {
  const GroupSpec g = GroupSpec::C(genus);
  const Sigma minus = mode == SigmaMode::tracked ? Sigma::minus : Sigma::plus;
  SignedGradedRep out(g);
  out.add(-1, Sigma::plus, VirtualRep::trivial(g));
  out.add(0, minus, standard_exterior(g, 1));
  out.add(1, minus, VirtualRep::trivial(g));
  return out;
}

/// Closed form: degree nu carries sum_mu sgn^{n+mu} (x) Lambda^{n-2mu}, n = g-1-|nu|.
inline SignedGradedRep theta_jacobian_closed_form(int genus) {
  if (genus < 2) throw InputError("genus must be >= 2");
  const GroupSpec g = GroupSpec::C(genus);
  SignedGradedRep out(g);
  for (int nu = -(genus - 1); nu <= genus - 1; ++nu) {
    const int n = genus - 1 - std::abs(nu);
    for (int mu = 0; 2 * mu <= n; ++mu) out.add(nu, sigma_parity(n + mu), standard_exterior(g, n - 2 * mu));
  }
  return out;
}

/// Replaces positive degrees by the mirror image of negative ones. Hard
/// Lefschetz commutes with sigma, so the sign structure in degree nu > 0 is
/// that of degree -nu.
inline SignedGradedRep lefschetz_mirror(const SignedGradedRep& g) {
  SignedGradedRep out(g.group());
  for (const auto& [d, parts] : g.entries()) {
    if (d > 0) continue;
    for (const auto& [s, v] : parts) {
      out.add(d, s, v);
      if (d < 0) out.add(-d, s, v);
    }
  }
  return out;
}

/// H(JC, delta_Theta) as the peeled super exterior power Lambda^{g-1} of
/// H(JC, delta_C), signs mirrored from non-positive degrees. Throws
/// Asymmetric if the sign-blind core is not degree-symmetric.
inline SignedGradedRep theta_jacobian_from_curve(int genus) {
  const auto core = peel_constants(super_ext(genus - 1, curve_hypercohomology(genus, SigmaMode::tracked)), genus).core;
  if (!core.sigma_blind().degree_symmetric())
    throw Asymmetric("peeled exterior power is not degree-symmetric");
  const auto mirrored = lefschetz_mirror(core);
  if (mirrored.sigma_blind() != core.sigma_blind())
    throw Asymmetric("mirror changes the underlying representation");
  return mirrored;
}

}  // namespace thetacalc
