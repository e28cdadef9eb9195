#pragma once

// Representation-ring arithmetic: virtual representations, tensor products by
// character convolution, Adams operations and the plethysms built from them.

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "thetacalc/lie_core.hpp"

namespace thetacalc {

/// Integer combination of irreducibles of one group, keyed by highest weight.
/// Multiplicities may be negative; zero entries are never stored.
class VirtualRep {
 public:
  VirtualRep() = default;
  explicit VirtualRep(GroupSpec group) : group_(std::move(group)) {}

  static VirtualRep irrep(const IrrepLabel& label, Mult mult = 1) {
    VirtualRep v(label.group);
    v.add(label.weight, mult);
    return v;
  }
  static VirtualRep trivial(const GroupSpec& group) { return irrep(IrrepLabel(group, zero_weight(group))); }

  const GroupSpec& group() const { return group_; }
  const std::map<Weight, Mult>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Mult multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Weight& w, Mult m) {
    if (m == 0) return;
    IrrepLabel(group_, w);  // validates
    auto [it, inserted] = terms_.try_emplace(w, m);
    if (!inserted && (it->second += m) == 0) terms_.erase(it);
  }

  VirtualRep& operator+=(const VirtualRep& o) {
    adopt_group(o);
    for (const auto& [w, m] : o.terms_) add_unchecked(w, m);
    return *this;
  }
  VirtualRep& operator-=(const VirtualRep& o) {
    adopt_group(o);
    for (const auto& [w, m] : o.terms_) add_unchecked(w, -m);
    return *this;
  }
  VirtualRep& operator*=(Mult k) {
    if (k == 0) terms_.clear();
    for (auto& [w, m] : terms_) m *= k;
    return *this;
  }
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(Mult k, VirtualRep a) { return a *= k; }
  friend VirtualRep operator-(VirtualRep a) { return a *= -1; }

  friend bool operator==(const VirtualRep& a, const VirtualRep& b) {
    if (a.empty() && b.empty()) return true;
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

  /// Virtual dimension.
  Mult dim() const {
    Mult d = 0;
    for (const auto& [w, m] : terms_) d += m * weyl_dim(IrrepLabel(group_, w));
    return d;
  }

  bool effective() const {
    for (const auto& [w, m] : terms_)
      if (m < 0) return false;
    return true;
  }

  Character character() const {
    Character ch;
    for (const auto& [w, m] : terms_)
      for (const auto& [x, k] : *irreducible_character(IrrepLabel(group_, w))) {
        auto [it, inserted] = ch.try_emplace(x, m * k);
        if (!inserted && (it->second += m * k) == 0) ch.erase(it);
      }
    return ch;
  }

 private:
  void adopt_group(const VirtualRep& o) {
    if (group_.factors().empty()) group_ = o.group_;
    else if (!o.group_.factors().empty()) require_same_group(group_, o.group_);
  }
  void add_unchecked(const Weight& w, Mult m) {
    auto [it, inserted] = terms_.try_emplace(w, m);
    if (!inserted && (it->second += m) == 0) terms_.erase(it);
  }

  GroupSpec group_;
  std::map<Weight, Mult> terms_;
};

// ---------------------------------------------------------------------------
// Formatting of weights and representations
// ---------------------------------------------------------------------------

/// "0010" for small labels, "1,0,12" once an entry exceeds 9 or a factor has
/// rank >= 10; factors of a product are joined with '|'.
inline std::string format_weight(const GroupSpec& group, const Weight& w) {
  std::string s;
  const auto& fs = group.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += '|';
    const int off = group.offset(i);
    bool wide = fs[i].rank >= 10;
    for (int j = 0; j < fs[i].rank; ++j) wide = wide || w[off + j] > 9 || w[off + j] < 0;
    for (int j = 0; j < fs[i].rank; ++j) {
      if (wide && j) s += ',';
      s += std::to_string(w[off + j]);
    }
  }
  return s;
}

inline std::string format_rep(const VirtualRep& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [w, m] : v.terms()) {
    if (!s.empty()) s += " + ";
    if (m < 0) s += "-";
    s += "(" + format_weight(v.group(), w) + ")";
    if (m != 1 && m != -1) s += "^" + std::to_string(m < 0 ? -m : m);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Character arithmetic
// ---------------------------------------------------------------------------

namespace detail {

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : w) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
    return h;
  }
};

inline Character to_character(std::unordered_map<Weight, Mult, WeightHash>&& acc) {
  Character out;
  for (auto& [w, m] : acc)
    if (m) out.emplace(w, m);
  return out;
}

}  // namespace detail

inline Character convolve(const Character& a, const Character& b) {
  std::unordered_map<Weight, Mult, detail::WeightHash> acc;
  acc.reserve(a.size() * 4 + b.size() * 4);
  Weight x;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      x.resize(wa.size());
      for (std::size_t i = 0; i < wa.size(); ++i) x[i] = wa[i] + wb[i];
      acc[x] += ma * mb;
    }
  return detail::to_character(std::move(acc));
}

inline Character adams_character(const Character& c, int k) {
  Character out;
  for (const auto& [w, m] : c) {
    Weight x = w;
    for (int& e : x) e *= k;
    out[x] += m;
  }
  return out;
}

inline Character linear_combination(const Character& a, Mult ka, const Character& b, Mult kb) {
  Character out;
  for (const auto& [w, m] : a) out[w] += ka * m;
  for (const auto& [w, m] : b) out[w] += kb * m;
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

inline Character divide_exact(Character c, Mult d, const char* what) {
  for (auto& [w, m] : c) {
    if (m % d != 0) throw InvariantViolation("exact division", std::string(what) + ": character not divisible");
    m /= d;
  }
  return c;
}

/// Expansion of a Weyl-invariant character in irreducible characters, by
/// repeatedly removing the irreducible of the highest remaining dominant weight.
inline VirtualRep decompose(const GroupSpec& group, const Character& character) {
  for (const auto& [w, m] : character) {
    if (static_cast<int>(w.size()) != group.rank()) throw InputError("character weight length does not match group rank");
    if (m == 0) continue;
    const Weight d = dominant_representative(group, w);
    auto it = character.find(d);
    if (it == character.end() || it->second != m)
      throw NonInvariantCharacter("multiplicity of (" + format_weight(group, w) + ") differs from its dominant representative");
  }
  std::size_t nonzero = 0, covered = 0;
  for (const auto& [w, m] : character)
    if (m != 0) {
      ++nonzero;
      if (is_dominant(w)) covered += weyl_orbit(group, w).size();
    }
  if (covered != nonzero) throw NonInvariantCharacter("character is not a union of full Weyl orbits");

  std::map<Weight, Mult> rest;
  std::set<std::pair<long long, Weight>> queue;  // dominant weights by level
  for (const auto& [w, m] : character)
    if (m != 0 && is_dominant(w)) {
      rest.emplace(w, m);
      queue.emplace(weight_level(group, w), w);
    }

  VirtualRep out(group);
  const std::size_t bound = 4 * character.size() + 1000;
  std::size_t steps = 0;
  while (!queue.empty()) {
    if (++steps > bound) throw ResourceLimit("decomposition did not terminate within the iteration bound");
    auto top = std::prev(queue.end());
    const Weight hw = top->second;
    queue.erase(top);
    auto it = rest.find(hw);
    if (it == rest.end()) continue;
    const Mult m = it->second;
    out.add(hw, m);
    for (const auto& [x, k] : *irreducible_character(IrrepLabel(group, hw))) {
      if (!is_dominant(x)) continue;
      auto [jt, inserted] = rest.try_emplace(x, -m * k);
      if (!inserted) jt->second -= m * k;
      if (jt->second == 0) {
        rest.erase(jt);
        queue.erase({weight_level(group, x), x});
      } else if (inserted) {
        queue.emplace(weight_level(group, x), x);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

namespace detail {

inline std::shared_ptr<const VirtualRep> irrep_product(const GroupSpec& group, const Weight& a, const Weight& b) {
  static std::shared_mutex mu;
  static std::map<std::tuple<std::vector<Factor>, Weight, Weight>, std::shared_ptr<const VirtualRep>> cache;
  const auto key = a <= b ? std::make_tuple(group.factors(), a, b) : std::make_tuple(group.factors(), b, a);
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto prod = std::make_shared<const VirtualRep>(decompose(
      group, convolve(*irreducible_character(IrrepLabel(group, a)), *irreducible_character(IrrepLabel(group, b)))));
  std::unique_lock lock(mu);
  return cache.try_emplace(key, std::move(prod)).first->second;
}

}  // namespace detail

inline VirtualRep tensor(const VirtualRep& a, const VirtualRep& b) {
  if (a.empty() || b.empty()) return VirtualRep(a.group().factors().empty() ? b.group() : a.group());
  require_same_group(a.group(), b.group());
  VirtualRep out(a.group());
  for (const auto& [wa, ma] : a.terms())
    for (const auto& [wb, mb] : b.terms()) out += (ma * mb) * *detail::irrep_product(a.group(), wa, wb);
  return out;
}

inline VirtualRep adams(int k, const VirtualRep& v) {
  if (k < 1) throw InputError("Adams operation needs k >= 1");
  if (k == 1 || v.empty()) return v;
  return decompose(v.group(), adams_character(v.character(), k));
}

inline VirtualRep sym2(const VirtualRep& v) {
  if (v.empty()) return v;
  const Character c = v.character();
  return decompose(v.group(), divide_exact(linear_combination(convolve(c, c), 1, adams_character(c, 2), 1), 2, "sym2"));
}

inline VirtualRep alt2(const VirtualRep& v) {
  if (v.empty()) return v;
  const Character c = v.character();
  return decompose(v.group(), divide_exact(linear_combination(convolve(c, c), 1, adams_character(c, 2), -1), 2, "alt2"));
}

enum class PowerKind { exterior, symmetric };

/// Characters of Lambda^j (or S^j) for j = 0..k, by the Newton identities
/// j E_j = sum_i (+-1)^(i-1) psi^i(chi) E_{j-i}.
inline std::vector<Character> power_characters(const GroupSpec& group, const Character& c, int k, PowerKind kind) {
  std::vector<Character> e{Character{{zero_weight(group), 1}}};
  std::vector<Character> psi(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) psi[i] = adams_character(c, i);
  for (int j = 1; j <= k; ++j) {
    Character acc;
    for (int i = 1; i <= j; ++i) {
      const Mult s = (kind == PowerKind::exterior && i % 2 == 0) ? -1 : 1;
      for (const auto& [w, m] : convolve(psi[i], e[j - i])) acc[w] += s * m;
    }
    std::erase_if(acc, [](const auto& x) { return x.second == 0; });
    e.push_back(divide_exact(std::move(acc), j, "Newton identity"));
  }
  return e;
}

inline VirtualRep exterior_power(const VirtualRep& v, int k) {
  if (k < 0) throw InputError("negative exterior power");
  if (k == 0) return VirtualRep::trivial(v.group());
  if (v.empty()) return v;
  return decompose(v.group(), power_characters(v.group(), v.character(), k, PowerKind::exterior)[k]);
}

inline VirtualRep symmetric_power(const VirtualRep& v, int k) {
  if (k < 0) throw InputError("negative symmetric power");
  if (k == 0) return VirtualRep::trivial(v.group());
  if (v.empty()) return v;
  return decompose(v.group(), power_characters(v.group(), v.character(), k, PowerKind::symmetric)[k]);
}

/// Lambda^k of the standard representation of the first factor, as a
/// representation of the whole (possibly product) group. Memoized.
inline VirtualRep standard_exterior(const GroupSpec& group, int k) {
  static std::shared_mutex mu;
  static std::map<std::pair<std::vector<Factor>, int>, VirtualRep> cache;
  const auto key = std::make_pair(group.factors(), k);
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const GroupSpec first({group.factors().front()});
  const VirtualRep lam = exterior_power(VirtualRep::irrep(IrrepLabel(first, standard_weight(first))), k);
  VirtualRep out(group);
  for (const auto& [w, m] : lam.terms()) {
    Weight x = zero_weight(group);
    std::copy(w.begin(), w.end(), x.begin());
    out.add(x, m);
  }
  std::unique_lock lock(mu);
  return cache.try_emplace(key, std::move(out)).first->second;
}

/// Embeds a representation of `v.group()` into `target`, whose factors
/// starting at factor index `factor_offset` must coincide with those of v;
/// the remaining factors act trivially.
inline VirtualRep inflate(const VirtualRep& v, const GroupSpec& target, std::size_t factor_offset = 0) {
  const auto& src = v.group().factors();
  const auto& dst = target.factors();
  if (factor_offset + src.size() > dst.size() ||
      !std::equal(src.begin(), src.end(), dst.begin() + static_cast<long>(factor_offset)))
    throw GroupMismatch("cannot inflate " + v.group().name() + " into " + target.name());
  const int off = target.offset(factor_offset);
  VirtualRep out(target);
  for (const auto& [w, m] : v.terms()) {
    Weight x = zero_weight(target);
    std::copy(w.begin(), w.end(), x.begin() + off);
    out.add(x, m);
  }
  return out;
}

}  // namespace thetacalc
