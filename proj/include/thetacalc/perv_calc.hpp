#pragma once

// Formal convolution calculus on the degenerate genus-4 fiber (a Jacobian
// whose theta divisor has the two ordinary double points +-e): labeled simple
// objects with Tate twists, their squares, monodromy-filtration diagrams and
// hypercohomology as graded Sp(8)-representations.

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thetacalc/graded_super.hpp"

namespace thetacalc {

inline constexpr int kDegenerateGenus = 4;

enum class SimpleKind { DeltaThetaS, SkyPmE, SkyPm2E, SkySigmaPlus, SkySigmaMinus, DeltaAB, Unit, DeltaXShift };

struct SimpleLabel {
  SimpleKind kind = SimpleKind::Unit;
  int a = 0;
  int b = 0;
  int mu = 0;

  static SimpleLabel of(SimpleKind k) { return {k, 0, 0, 0}; }
  static SimpleLabel delta_ab(int a, int b) {
    if (a < b || b < 0 || a + b > 2 * (kDegenerateGenus - 1))
      throw InputError("delta_{a,b} needs a >= b >= 0 and a + b <= " + std::to_string(2 * (kDegenerateGenus - 1)));
    return {SimpleKind::DeltaAB, a, b, 0};
  }
  static SimpleLabel delta_x(int mu) { return {SimpleKind::DeltaXShift, 0, 0, mu}; }

  friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;

  std::string name() const {
    switch (kind) {
      case SimpleKind::DeltaThetaS: return "delta_Theta_s";
      case SimpleKind::SkyPmE: return "1_pm_e";
      case SimpleKind::SkyPm2E: return "1_pm_2e";
      case SimpleKind::SkySigmaPlus: return "1_sigma+";
      case SimpleKind::SkySigmaMinus: return "1_sigma-";
      case SimpleKind::DeltaAB: return "p_delta_" + std::to_string(a) + "," + std::to_string(b);
      case SimpleKind::Unit: return "1";
      case SimpleKind::DeltaXShift: return "delta_X[" + std::to_string(mu) + "]";
    }
    return "?";
  }

  /// Weight of the untwisted object.
  int intrinsic_weight() const {
    switch (kind) {
      case SimpleKind::DeltaThetaS: return 3;
      case SimpleKind::DeltaAB: return 6;
      default: return 0;
    }
  }
};

inline SimpleLabel parse_simple(const std::string& s) {
  for (SimpleKind k : {SimpleKind::DeltaThetaS, SimpleKind::SkyPmE, SimpleKind::SkyPm2E, SimpleKind::SkySigmaPlus,
                       SimpleKind::SkySigmaMinus, SimpleKind::Unit})
    if (SimpleLabel::of(k).name() == s) return SimpleLabel::of(k);
  int a = 0, b = 0;
  if (std::sscanf(s.c_str(), "p_delta_%d,%d", &a, &b) == 2) return SimpleLabel::delta_ab(a, b);
  int mu = 0;
  if (std::sscanf(s.c_str(), "delta_X[%d]", &mu) == 1) return SimpleLabel::delta_x(mu);
  throw InputError("unknown simple object '" + s + "'");
}

/// A (possibly opaque) convolution product of simples with one Tate twist.
/// A twist of -k is written (-k) and raises the weight by 2k.
struct Term {
  std::vector<SimpleLabel> factors;  // sorted; a single entry for a simple
  int twist = 0;

  Term() = default;
  Term(std::vector<SimpleLabel> f, int t) : factors(std::move(f)), twist(t) { std::sort(factors.begin(), factors.end()); }
  Term(SimpleLabel s, int t = 0) : Term(std::vector<SimpleLabel>{s}, t) {}

  friend auto operator<=>(const Term&, const Term&) = default;

  int weight() const {
    int w = 0;
    for (const auto& f : factors) w += f.intrinsic_weight();
    return w - 2 * twist;
  }

  std::string label() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i].name();
    return s;
  }
};

/// Multiset of terms.
class FormalObject {
 public:
  FormalObject() = default;
  FormalObject(std::initializer_list<Term> terms) {
    for (const auto& t : terms) add(t);
  }

  const std::map<Term, Mult>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Term& t, Mult m = 1) {
    if (m == 0) return;
    auto it = terms_.find(t);
    const Mult total = (it == terms_.end() ? 0 : it->second) + m;
    if (total < 0) throw NegativeResult("negative multiplicity of " + t.label());
    if (total == 0) {
      terms_.erase(it);
    } else if (it == terms_.end()) {
      terms_.emplace(t, total);
    } else {
      it->second = total;
    }
  }

  void add(const FormalObject& o, Mult k) {
    for (const auto& [t, m] : o.terms_) add(t, k * m);
  }

  FormalObject& operator+=(const FormalObject& o) {
    add(o, 1);
    return *this;
  }
  /// Removes a sub-multiset; throws NegativeResult if `o` is not contained.
  FormalObject& operator-=(const FormalObject& o) {
    FormalObject out = *this;
    for (const auto& [t, m] : o.terms_) out.add(t, -m);
    return *this = std::move(out);
  }
  friend FormalObject operator+(FormalObject a, const FormalObject& b) { return a += b; }
  friend FormalObject operator-(FormalObject a, const FormalObject& b) { return a -= b; }
  friend bool operator==(const FormalObject&, const FormalObject&) = default;

  FormalObject twisted(int k) const {
    FormalObject out;
    for (const auto& [t, m] : terms_) out.add(Term(t.factors, t.twist + k), m);
    return out;
  }

  /// "(1_pm_2e + 1_sigma+)(-4)"-style rendering, grouped by twist.
  std::string render() const {
    if (terms_.empty()) return "0";
    std::map<int, std::vector<std::string>, std::greater<>> by_twist;
    for (const auto& [t, m] : terms_) {
      std::string s = t.factors.size() > 1 ? "(" + t.label() + ")" : t.label();
      if (m != 1) s += "^" + std::to_string(m);
      by_twist[t.twist].push_back(s);
    }
    std::string out;
    for (const auto& [tw, parts] : by_twist) {
      if (!out.empty()) out += " + ";
      std::string body;
      for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? " + " : "") + parts[i];
      if (tw == 0) out += body;
      else if (parts.size() == 1) out += body + "(" + std::to_string(tw) + ")";
      else out += "(" + body + ")(" + std::to_string(tw) + ")";
    }
    return out;
  }

 private:
  std::map<Term, Mult> terms_;
};

// ---------------------------------------------------------------------------
// Product table
// ---------------------------------------------------------------------------

enum class SquareVariant { sym, alt };

inline const char* variant_name(SquareVariant v) { return v == SquareVariant::sym ? "sym" : "alt"; }

/// S^2 or Lambda^2 of a simple; the twist doubles.
inline FormalObject square_simple(const Term& t, SquareVariant v) {
  if (t.factors.size() != 1) throw InputError("square of an opaque product is not tabulated: " + t.label());
  const int tw = 2 * t.twist;
  switch (t.factors[0].kind) {
    case SimpleKind::SkyPmE:
      if (v == SquareVariant::sym)
        return {Term(SimpleLabel::of(SimpleKind::SkyPm2E), tw), Term(SimpleLabel::of(SimpleKind::SkySigmaPlus), tw)};
      return {Term(SimpleLabel::of(SimpleKind::SkySigmaMinus), tw)};
    case SimpleKind::DeltaThetaS:
      if (v == SquareVariant::sym) return {Term(SimpleLabel::delta_ab(3, 3), tw), Term(SimpleLabel::delta_ab(5, 1), tw)};
      return {Term(SimpleLabel::delta_ab(4, 2), tw), Term(SimpleLabel::delta_ab(6, 0), tw)};
    default:
      throw InputError("square of " + t.factors[0].name() + " is not tabulated");
  }
}

/// Convolution product of two terms: the unit is neutral, a tabulated simple
/// times itself is S^2 + Lambda^2, anything else stays an opaque product.
inline FormalObject product(const Term& x, const Term& y) {
  const int tw = x.twist + y.twist;
  std::vector<SimpleLabel> fs;
  for (const auto& f : x.factors)
    if (f.kind != SimpleKind::Unit) fs.push_back(f);
  for (const auto& f : y.factors)
    if (f.kind != SimpleKind::Unit) fs.push_back(f);
  if (fs.empty()) return {Term(SimpleLabel::of(SimpleKind::Unit), tw)};
  if (fs.size() == 2 && fs[0] == fs[1] &&
      (fs[0].kind == SimpleKind::SkyPmE || fs[0].kind == SimpleKind::DeltaThetaS)) {
    const Term half(fs[0], 0);
    return (square_simple(half, SquareVariant::sym) + square_simple(half, SquareVariant::alt)).twisted(tw);
  }
  return {Term(std::move(fs), tw)};
}

inline FormalObject product(const FormalObject& x, const FormalObject& y) {
  FormalObject out;
  for (const auto& [tx, mx] : x.terms())
    for (const auto& [ty, my] : y.terms())
      out.add(product(tx, ty), mx * my);
  return out;
}

/// S^2 / Lambda^2 of a sum: diagonal squares from the table, C(m,2)-style
/// multiplicities for repeated terms, and all cross products.
inline FormalObject square(const FormalObject& x, SquareVariant v) {
  FormalObject out;
  const auto& ts = x.terms();
  for (auto it = ts.begin(); it != ts.end(); ++it) {
    const auto& [t, m] = *it;
    const Mult same = m * (m + 1) / 2;
    const Mult other = m * (m - 1) / 2;
    out.add(square_simple(t, v), same);
    if (other) out.add(square_simple(t, v == SquareVariant::sym ? SquareVariant::alt : SquareVariant::sym), other);
    for (auto jt = std::next(it); jt != ts.end(); ++jt) out.add(product(t, jt->first), m * jt->second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Filtration diagrams
// ---------------------------------------------------------------------------

/// Rows Gr_i of a monodromy filtration; row i is pure of weight base_weight + i.
struct FiltrationDiagram {
  std::map<int, FormalObject> rows;
  int base_weight = 0;

  friend bool operator==(const FiltrationDiagram&, const FiltrationDiagram&) = default;

  int weight_of(int row) const { return base_weight + row; }
  int top() const { return rows.empty() ? 0 : std::max(rows.rbegin()->first, -rows.begin()->first); }

  FormalObject row(int i) const {
    auto it = rows.find(i);
    return it == rows.end() ? FormalObject{} : it->second;
  }

  std::vector<int> weights() const {
    std::vector<int> w;
    for (const auto& [i, r] : rows)
      if (!r.empty()) w.push_back(weight_of(i));
    return w;
  }

  /// Primitive part P_{-k} = Gr_{-k} minus Gr_{-k-2}(-1), k >= 0.
  FormalObject primitive(int k) const {
    try {
      return row(-k) - row(-k - 2).twisted(-1);
    } catch (const NegativeResult&) {
      throw NegativePeel("Gr_" + std::to_string(-k - 2) + "(-1) is not contained in Gr_" + std::to_string(-k));
    }
  }

  /// Checks the weight rule and Gr_i = Gr_{-i}(-i) for every row.
  void validate() const {
    for (const auto& [i, r] : rows) {
      for (const auto& [t, m] : r.terms())
        if (t.weight() != weight_of(i))
          throw InvariantViolation("weight rule", t.label() + "(" + std::to_string(t.twist) + ") in Gr_" +
                                                      std::to_string(i) + " has weight " + std::to_string(t.weight()) +
                                                      ", expected " + std::to_string(weight_of(i)));
      if (i > 0 && row(-i).twisted(-i) != r)
        throw Asymmetric("Gr_" + std::to_string(i) + " is not Gr_" + std::to_string(-i) + "(" + std::to_string(-i) + ")");
    }
  }
};

/// The three-row diagram 1_{+-e}(-2) / delta_Theta_s / 1_{+-e}(-1), base weight 3.
inline FiltrationDiagram psi1_delta_diagram() {
  FiltrationDiagram d;
  d.base_weight = 3;
  d.rows[1] = {Term(SimpleLabel::of(SimpleKind::SkyPmE), -2)};
  d.rows[0] = {Term(SimpleLabel::of(SimpleKind::DeltaThetaS), 0)};
  d.rows[-1] = {Term(SimpleLabel::of(SimpleKind::SkyPmE), -1)};
  return d;
}

/// Row i of the square is the sum over i1 + i2 = i; diagonal rows are squared,
/// distinct rows multiplied. Weights add.
inline FiltrationDiagram diagram_square(const FiltrationDiagram& d, SquareVariant v) {
  FiltrationDiagram out;
  out.base_weight = 2 * d.base_weight;
  for (auto it = d.rows.begin(); it != d.rows.end(); ++it) {
    out.rows[2 * it->first] += square(it->second, v);
    for (auto jt = std::next(it); jt != d.rows.end(); ++jt) out.rows[it->first + jt->first] += product(it->second, jt->second);
  }
  std::erase_if(out.rows, [](const auto& r) { return r.second.empty(); });
  return out;
}

/// Full tensor square, row-wise: Gr_i = sum_{i1+i2=i} Gr_i1 * Gr_i2.
inline FiltrationDiagram diagram_tensor_square(const FiltrationDiagram& d) {
  FiltrationDiagram out;
  out.base_weight = 2 * d.base_weight;
  for (const auto& [i, x] : d.rows)
    for (const auto& [j, y] : d.rows) out.rows[i + j] += product(x, y);
  return out;
}

/// Diagrams of Psi_1(delta_+) and Psi_1(delta_-): the squares of the Psi_1(delta)
/// diagram, with the unit p_delta_{6,0} = 1 (the summand 1_X of Lambda^2)
/// removed from the alternating one.
inline FiltrationDiagram psi1_delta_pm_diagram(SquareVariant v) {
  FiltrationDiagram d = diagram_square(psi1_delta_diagram(), v);
  if (v == SquareVariant::alt) d.rows[0] -= FormalObject{Term(SimpleLabel::delta_ab(6, 0), 0)};
  return d;
}

/// Monospaced triangle: one line per row (top row first) with its weight, the
/// primitive P_{-k} and its N-images in column k.
inline std::string render_triangle(const FiltrationDiagram& d) {
  const int top = d.top();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(2 * top + 1),
                                              std::vector<std::string>(static_cast<std::size_t>(top + 1)));
  std::vector<std::size_t> width(static_cast<std::size_t>(top + 1), 0);
  for (int k = 0; k <= top; ++k) {
    const FormalObject p = d.primitive(k);
    if (p.empty()) continue;
    for (int j = 0; j <= k; ++j) {
      const int row = -k + 2 * j;
      std::string& c = cells[static_cast<std::size_t>(top - row)][static_cast<std::size_t>(k)];
      c = p.twisted(-j).render();
      width[static_cast<std::size_t>(k)] = std::max(width[static_cast<std::size_t>(k)], c.size());
    }
  }
  std::ostringstream os;
  for (int row = top; row >= -top; --row) {
    std::string line = "Gr_" + std::to_string(row);
    line.resize(6, ' ');
    std::string w = "w=" + std::to_string(d.weight_of(row));
    w.resize(5, ' ');
    line += w + "|";
    for (int k = 0; k <= top; ++k) {
      std::string c = cells[static_cast<std::size_t>(top - row)][static_cast<std::size_t>(k)];
      c.resize(width[static_cast<std::size_t>(k)], ' ');
      line += " " + c + " |";
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '|')) line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Hypercohomology
// ---------------------------------------------------------------------------

namespace detail {

inline const GroupSpec& sp8() {
  static const GroupSpec g = GroupSpec::C(kDegenerateGenus);
  return g;
}

template <class K, class F>
SignedGradedRep memoized(std::map<K, SignedGradedRep>& cache, std::mutex& mu, const K& key, F&& make) {
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  SignedGradedRep value = make();
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(value)).first->second;
}

}  // namespace detail

/// H(delta_c): the peeled super exterior power Lambda^c of H(delta_C), sign-blind.
inline SignedGradedRep jacobian_delta_c(int c) {
  static std::mutex mu;
  static std::map<int, SignedGradedRep> cache;
  return detail::memoized(cache, mu, c, [c] {
    const int g = kDegenerateGenus;
    return peel_constants(super_ext(c, curve_hypercohomology(g, SigmaMode::ignored)), g, SigmaMode::ignored).core;
  });
}

/// Littlewood-Richardson difference rule: delta_{a,b} is delta_a * delta_b
/// minus delta_{a+1} * delta_{b-1}, up to constant shifts.
inline SignedGradedRep lr_delta_ab(int a, int b) {
  if (!(a >= b && b > 0 && a + b <= 2 * (kDegenerateGenus - 1)))
    throw InputError("lr_delta_ab needs a >= b > 0 and a + b <= 6");
  static std::mutex mu;
  static std::map<std::pair<int, int>, SignedGradedRep> cache;
  return detail::memoized(cache, mu, std::make_pair(a, b), [a, b] {
    const auto diff = graded_tensor(jacobian_delta_c(a), jacobian_delta_c(b)) -
                      graded_tensor(jacobian_delta_c(a + 1), jacobian_delta_c(b - 1));
    auto core = peel_constants(diff, kDegenerateGenus, SigmaMode::ignored).core;
    if (!core.effective())
      throw NegativeResult("delta_{" + std::to_string(a) + "," + std::to_string(b) + "} is not effective");
    if (!core.degree_symmetric()) throw Asymmetric("delta_{" + std::to_string(a) + "," + std::to_string(b) + "}");
    return core;
  });
}

inline SignedGradedRep hyper(const SimpleLabel& s) {
  const GroupSpec& g = detail::sp8();
  const VirtualRep one = VirtualRep::trivial(g);
  switch (s.kind) {
    case SimpleKind::SkyPmE:
    case SimpleKind::SkyPm2E: {
      // two points swapped by sigma
      SignedGradedRep out(g);
      out.add(0, Sigma::plus, one);
      out.add(0, Sigma::minus, one);
      return out;
    }
    case SimpleKind::SkySigmaPlus:
    case SimpleKind::Unit: return SignedGradedRep::single(0, Sigma::plus, one);
    case SimpleKind::SkySigmaMinus: return SignedGradedRep::single(0, Sigma::minus, one);
    case SimpleKind::DeltaThetaS: return theta_jacobian_closed_form(kDegenerateGenus);
    case SimpleKind::DeltaAB: return s.b == 0 ? jacobian_delta_c(s.a) : lr_delta_ab(s.a, s.b);
    case SimpleKind::DeltaXShift:
      return shifted_constant(g, kDegenerateGenus, s.mu, {{Sigma::plus, one}});
  }
  throw InputError("unknown label");
}

/// Kunneth: a product term maps to the graded tensor product of its factors.
/// Twists are not recorded in the result.
inline SignedGradedRep hyper(const Term& t) {
  SignedGradedRep out = SignedGradedRep::unit(detail::sp8());
  for (const auto& f : t.factors) out = graded_tensor(out, hyper(f));
  return out;
}

inline SignedGradedRep hyper(const FormalObject& obj) {
  SignedGradedRep out(detail::sp8());
  for (const auto& [t, m] : obj.terms()) {
    const SignedGradedRep h = hyper(t);
    for (Mult i = 0; i < m; ++i) out += h;
  }
  return out;
}

inline Mult euler_check(const FormalObject& obj) { return hyper(obj).euler(); }
inline Mult euler_check(const Term& t) { return hyper(t).euler(); }

// ---------------------------------------------------------------------------
// Degenerate limit of B
// ---------------------------------------------------------------------------

struct LimitPiece {
  std::string part;  // "B/B^N" or "B^N"
  int exterior_degree;
  int twist;
  int weight() const { return exterior_degree - 2 * twist; }
  Mult dim() const { return standard_exterior(detail::sp8(), exterior_degree).dim(); }
};

/// Weight-graded pieces of B (dim 10) under the degenerate limit:
/// B/B^N = Lambda^0(-2), and B^N is an extension of Lambda^1(-1) by Lambda^0(-1).
inline std::vector<LimitPiece> degenerate_b() {
  return {{"B/B^N", 0, -2}, {"B^N", 1, -1}, {"B^N", 0, -1}};
}

}  // namespace thetacalc
