#pragma once

// Root data, weights, Weyl groups and weight multiplicities for the classical
// types A, B, C, D and finite products of them.
//
// Weights are always written in the fundamental-weight (Dynkin label) basis.
// For a product group the per-factor tuples are concatenated in factor order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "thetacalc/errors.hpp"

namespace thetacalc {

using Weight = std::vector<int>;
using Mult = std::int64_t;
/// Weight diagram: weight -> multiplicity. Zero entries are never stored.
using Character = std::map<Weight, Mult>;

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

struct Factor {
  Family family;
  int rank;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

/// A finite product of simple classical groups. `isogeny` is free-form
/// metadata (e.g. "mu3" for Sl(6)/mu_3); it never enters a computation and is
/// ignored by compatibility checks.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<Factor> factors, std::string isogeny = {})
      : factors_(std::move(factors)), isogeny_(std::move(isogeny)) {
    if (factors_.empty()) throw InputError("group must have at least one factor");
    for (const auto& f : factors_) {
      const int min_rank = f.family == Family::D ? 2 : 1;
      if (f.rank < min_rank)
        throw InputError("rank of " + std::string(1, family_letter(f.family)) +
                         " factor must be >= " + std::to_string(min_rank));
    }
  }

  static GroupSpec C(int rank) { return GroupSpec({{Family::C, rank}}); }

  const std::vector<Factor>& factors() const { return factors_; }
  const std::string& isogeny() const { return isogeny_; }

  int rank() const {
    int r = 0;
    for (const auto& f : factors_) r += f.rank;
    return r;
  }

  /// Offset of factor `i` inside a concatenated weight.
  int offset(std::size_t i) const {
    int o = 0;
    for (std::size_t k = 0; k < i; ++k) o += factors_[k].rank;
    return o;
  }

  GroupSpec times(const GroupSpec& other) const {
    auto fs = factors_;
    fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
    return GroupSpec(std::move(fs));
  }

  std::string name() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += factors_[i].name();
    }
    if (!isogeny_.empty()) s += "/" + isogeny_;
    return s;
  }

  bool compatible(const GroupSpec& other) const { return factors_ == other.factors_; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  std::string isogeny_;
};

inline void require_same_group(const GroupSpec& a, const GroupSpec& b) {
  if (!a.compatible(b)) throw GroupMismatch("group mismatch: " + a.name() + " vs " + b.name());
}

struct IrrepLabel {
  GroupSpec group;
  Weight weight;

  IrrepLabel(GroupSpec g, Weight w) : group(std::move(g)), weight(std::move(w)) { validate(); }

  void validate() const {
    if (static_cast<int>(weight.size()) != group.rank())
      throw InputError("weight has " + std::to_string(weight.size()) + " entries, group " +
                       group.name() + " has rank " + std::to_string(group.rank()));
    for (int w : weight)
      if (w < 0) throw InputError("highest weight must be dominant (non-negative labels)");
  }
};

inline Weight zero_weight(const GroupSpec& g) { return Weight(static_cast<std::size_t>(g.rank()), 0); }

/// Highest weight of the standard representation of a single-factor group.
inline Weight standard_weight(const GroupSpec& g) {
  Weight w = zero_weight(g);
  w.at(0) = 1;
  return w;
}

// ---------------------------------------------------------------------------
// Root data of one simple factor
// ---------------------------------------------------------------------------

namespace detail {

using Rational = boost::rational<long long>;
using BigInt = boost::multiprecision::cpp_int;

inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c].numerator() == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].numerator() == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

class RootData {
 public:
  explicit RootData(Factor f) : factor_(f), n_(f.rank) {
    build_cartan();
    build_inverse();
    build_positive_roots();
  }

  const Factor& factor() const { return factor_; }
  int rank() const { return n_; }

  /// Simple root i in Dynkin coordinates.
  const Weight& simple_root(int i) const { return cartan_[i]; }
  const std::vector<Weight>& positive_roots() const { return positive_; }

  /// Integer-scaled invariant form on Dynkin coordinates.
  long long inner(const Weight& a, const Weight& b, int off_a = 0, int off_b = 0) const {
    long long s = 0;
    for (int i = 0; i < n_; ++i) {
      const long long ai = a[off_a + i];
      if (!ai) continue;
      for (int j = 0; j < n_; ++j) s += ai * gram_[i][j] * b[off_b + j];
    }
    return s;
  }

  /// Coordinates of `d` (a weight difference) in the simple-root basis, scaled
  /// by `root_denominator()`.
  std::vector<long long> root_coords_scaled(const Weight& d, int off = 0) const {
    std::vector<long long> c(n_, 0);
    for (int i = 0; i < n_; ++i) {
      if (!d[off + i]) continue;
      for (int j = 0; j < n_; ++j) c[j] += static_cast<long long>(d[off + i]) * minv_scaled_[i][j];
    }
    return c;
  }
  long long root_denominator() const { return minv_den_; }

  /// True iff `hi - lo` is a non-negative integer combination of simple roots.
  bool dominates(const Weight& hi, const Weight& lo, int off_hi = 0, int off_lo = 0) const {
    Weight d(n_);
    for (int i = 0; i < n_; ++i) d[i] = hi[off_hi + i] - lo[off_lo + i];
    for (long long c : root_coords_scaled(d))
      if (c < 0 || c % minv_den_ != 0) return false;
    return true;
  }

  /// Linear functional strictly positive on positive roots.
  long long level(const Weight& w, int off = 0) const {
    long long s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<long long>(w[off + i]) * rho_pairing_[i];
    return s;
  }

  void reflect_in_place(Weight& w, int i) const {
    const int c = w[i];
    if (!c) return;
    for (int j = 0; j < n_; ++j) w[j] -= c * cartan_[i][j];
  }

  Weight dominant_representative(Weight w) const {
    for (;;) {
      int i = 0;
      while (i < n_ && w[i] >= 0) ++i;
      if (i == n_) return w;
      reflect_in_place(w, i);
    }
  }

 private:
  void build_cartan() {
    const int n = n_;
    std::vector<int> len(n, 2);
    if (factor_.family == Family::B) len[n - 1] = 1;
    if (factor_.family == Family::C) len[n - 1] = 4;
    std::vector<std::vector<int>> sym(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) sym[i][i] = len[i];
    auto link = [&](int i, int j, int v) { sym[i][j] = sym[j][i] = v; };
    if (factor_.family == Family::D) {
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      if (n >= 3) link(n - 3, n - 1, -1);
    } else {
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      if (factor_.family == Family::C && n >= 2) link(n - 2, n - 1, -2);
    }
    cartan_.assign(n, Weight(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cartan_[i][j] = 2 * sym[i][j] / len[j];
    len_ = len;
  }

  void build_inverse() {
    using detail::Rational;
    const int n = n_;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    const auto inv = detail::invert(m);

    long long den = 1;
    for (const auto& row : inv)
      for (const auto& x : row) den = std::lcm(den, x.denominator());
    minv_den_ = den;
    minv_scaled_.assign(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) minv_scaled_[i][j] = (inv[i][j] * den).numerator();

    // (omega_i, omega_j) = Minv_ij * |alpha_j|^2 / 2, scaled to integers.
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    long long gden = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        g[i][j] = inv[i][j] * Rational(len_[j], 2);
        gden = std::lcm(gden, g[i][j].denominator());
      }
    gram_.assign(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram_[i][j] = (g[i][j] * gden).numerator();

    rho_pairing_.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rho_pairing_[i] += gram_[i][j];
  }

  void build_positive_roots() {
    const int n = n_;
    std::set<std::vector<int>> roots;  // simple-root coordinates
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      roots.insert(e);
      frontier.push_back(e);
    }
    auto dynkin = [&](const std::vector<int>& r) {
      Weight w(n, 0);
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) w[j] += r[k] * cartan_[k][j];
      return w;
    };
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& r : frontier) {
        const Weight dl = dynkin(r);
        for (int i = 0; i < n; ++i) {
          int p = 0;  // how far the i-string extends downwards
          for (;;) {
            auto t = r;
            t[i] -= p + 1;
            if (roots.count(t)) ++p;
            else break;
          }
          if (p - dl[i] > 0) {
            auto t = r;
            t[i] += 1;
            if (roots.insert(t).second) next.push_back(t);
          }
        }
      }
      frontier = std::move(next);
    }
    for (const auto& r : roots) positive_.push_back(dynkin(r));
  }

  Factor factor_;
  int n_;
  std::vector<int> len_;
  std::vector<Weight> cartan_;  // row i = simple root i in Dynkin coordinates
  std::vector<std::vector<long long>> gram_;
  std::vector<std::vector<long long>> minv_scaled_;
  long long minv_den_ = 1;
  std::vector<long long> rho_pairing_;
  std::vector<Weight> positive_;
};

inline const RootData& root_data(const Factor& f) {
  static std::shared_mutex mu;
  static std::map<Factor, std::unique_ptr<RootData>> cache;
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(f); it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<RootData>(f);
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.try_emplace(f, std::move(data));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Dimension cap
// ---------------------------------------------------------------------------

inline std::atomic<Mult>& dimension_cap_storage() {
  static std::atomic<Mult> cap{100000};
  return cap;
}
inline Mult dimension_cap() { return dimension_cap_storage().load(); }
inline void set_dimension_cap(Mult cap) { dimension_cap_storage().store(cap); }

// ---------------------------------------------------------------------------
// Weyl dimension formula
// ---------------------------------------------------------------------------

namespace detail {

inline detail::BigInt factor_dim(const Factor& f, const Weight& w, int off) {
  const RootData& rd = root_data(f);
  const int n = rd.rank();
  Weight lr(n), rho(n, 1);
  for (int i = 0; i < n; ++i) lr[i] = w[off + i] + 1;
  BigInt num = 1, den = 1;
  for (const auto& a : rd.positive_roots()) {
    num *= rd.inner(lr, a);
    den *= rd.inner(rho, a);
  }
  return num / den;
}

}  // namespace detail

/// Product over factors of the Weyl dimension formula.
inline Mult weyl_dim(const IrrepLabel& label) {
  detail::BigInt d = 1;
  const auto& fs = label.group.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) d *= detail::factor_dim(fs[i], label.weight, label.group.offset(i));
  if (d > std::numeric_limits<Mult>::max()) throw ResourceLimit("dimension overflows 64 bits");
  return static_cast<Mult>(d);
}

// ---------------------------------------------------------------------------
// Weyl orbits
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Weight> factor_orbit(const RootData& rd, const Weight& start) {
  std::set<Weight> seen{start};
  std::vector<Weight> order{start};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int i = 0; i < rd.rank(); ++i) {
      if (order[k][i] == 0) continue;
      Weight r = order[k];
      rd.reflect_in_place(r, i);
      if (seen.insert(r).second) order.push_back(std::move(r));
    }
  }
  return order;
}

template <class F>
void for_each_product(const std::vector<std::vector<std::pair<Weight, Mult>>>& parts, F&& emit) {
  std::size_t total_rank = 0;
  for (const auto& p : parts)
    if (!p.empty()) total_rank += p.front().first.size();
  Weight w(total_rank);
  std::vector<std::size_t> idx(parts.size(), 0);
  for (const auto& p : parts)
    if (p.empty()) return;
  for (;;) {
    std::size_t o = 0;
    Mult m = 1;
    for (std::size_t f = 0; f < parts.size(); ++f) {
      const auto& [fw, fm] = parts[f][idx[f]];
      std::copy(fw.begin(), fw.end(), w.begin() + static_cast<long>(o));
      o += fw.size();
      m *= fm;
    }
    emit(w, m);
    std::size_t f = parts.size();
    while (f > 0) {
      --f;
      if (++idx[f] < parts[f].size()) break;
      idx[f] = 0;
      if (f == 0) return;
    }
    if (parts.empty()) return;
  }
}

}  // namespace detail

/// Orbit of `weight` under the Weyl group of `group` (factor-wise).
inline std::set<Weight> weyl_orbit(const GroupSpec& group, const Weight& weight) {
  if (static_cast<int>(weight.size()) != group.rank()) throw InputError("weight length does not match group rank");
  std::vector<std::vector<std::pair<Weight, Mult>>> parts;
  const auto& fs = group.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const int off = group.offset(i);
    Weight w(weight.begin() + off, weight.begin() + off + fs[i].rank);
    std::vector<std::pair<Weight, Mult>> orb;
    for (auto& o : detail::factor_orbit(root_data(fs[i]), w)) orb.emplace_back(std::move(o), 1);
    parts.push_back(std::move(orb));
  }
  std::set<Weight> out;
  detail::for_each_product(parts, [&](const Weight& w, Mult) { out.insert(w); });
  return out;
}

/// Dominant member of the Weyl orbit of `weight`.
inline Weight dominant_representative(const GroupSpec& group, const Weight& weight) {
  Weight out = weight;
  const auto& fs = group.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const int off = group.offset(i);
    Weight w(weight.begin() + off, weight.begin() + off + fs[i].rank);
    w = root_data(fs[i]).dominant_representative(std::move(w));
    std::copy(w.begin(), w.end(), out.begin() + off);
  }
  return out;
}

inline bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

inline long long weight_level(const GroupSpec& group, const Weight& w) {
  long long s = 0;
  const auto& fs = group.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) s += root_data(fs[i]).level(w, group.offset(i));
  return s;
}

// ---------------------------------------------------------------------------
// Freudenthal multiplicities
// ---------------------------------------------------------------------------

namespace detail {

/// Multiplicities of the dominant weights of the irreducible module of one
/// simple factor with highest weight `hw`.
inline std::map<Weight, Mult> freudenthal_dominant(const RootData& rd, const Weight& hw) {
  const int n = rd.rank();
  const auto& pos = rd.positive_roots();

  // Dominant weights below hw, by breadth-first descent along positive roots.
  std::set<Weight> seen{hw};
  std::vector<Weight> dominant{hw};
  for (std::size_t k = 0; k < dominant.size(); ++k) {
    for (const auto& a : pos) {
      Weight x(n);
      for (int j = 0; j < n; ++j) x[j] = dominant[k][j] - a[j];
      Weight d = rd.dominant_representative(std::move(x));
      if (!seen.count(d) && rd.dominates(hw, d)) {
        seen.insert(d);
        dominant.push_back(std::move(d));
      }
    }
  }

  auto depth = [&](const Weight& w) {
    Weight d(n);
    for (int j = 0; j < n; ++j) d[j] = hw[j] - w[j];
    long long s = 0;
    for (long long c : rd.root_coords_scaled(d)) s += c;
    return s;
  };
  std::sort(dominant.begin(), dominant.end(),
            [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });

  Weight lr(n);
  for (int j = 0; j < n; ++j) lr[j] = hw[j] + 1;
  const long long top = rd.inner(lr, lr);

  std::map<Weight, Mult> mult{{hw, 1}};
  Weight x(n), mr(n);
  for (std::size_t k = 1; k < dominant.size(); ++k) {
    const Weight& mu = dominant[k];
    long long acc = 0;
    for (const auto& a : pos) {
      for (int step = 1;; ++step) {
        for (int j = 0; j < n; ++j) x[j] = mu[j] + step * a[j];
        const Weight d = rd.dominant_representative(x);
        if (!rd.dominates(hw, d)) break;
        if (auto it = mult.find(d); it != mult.end()) acc += it->second * rd.inner(x, a);
      }
    }
    for (int j = 0; j < n; ++j) mr[j] = mu[j] + 1;
    const long long denom = top - rd.inner(mr, mr);
    if (denom <= 0 || (2 * acc) % denom != 0)
      throw InvariantViolation("Freudenthal recursion", "non-integral multiplicity");
    if (const Mult m = 2 * acc / denom) mult[mu] = m;
  }
  return mult;
}

struct CharacterCache {
  std::shared_mutex mu;
  std::map<std::pair<Factor, Weight>, std::shared_ptr<const std::vector<std::pair<Weight, Mult>>>> factors;
  std::map<std::pair<std::vector<Factor>, Weight>, std::shared_ptr<const Character>> products;
};

inline CharacterCache& character_cache() {
  static CharacterCache c;
  return c;
}

/// Full weight diagram of one factor, as a flat list.
inline std::shared_ptr<const std::vector<std::pair<Weight, Mult>>> factor_character(const Factor& f,
                                                                                    const Weight& hw) {
  auto& cache = character_cache();
  const auto key = std::make_pair(f, hw);
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.factors.find(key); it != cache.factors.end()) return it->second;
  }
  const RootData& rd = root_data(f);
  auto out = std::make_shared<std::vector<std::pair<Weight, Mult>>>();
  for (const auto& [d, m] : freudenthal_dominant(rd, hw))
    for (auto& w : factor_orbit(rd, d)) out->emplace_back(std::move(w), m);
  std::sort(out->begin(), out->end());
  std::unique_lock lock(cache.mu);
  return cache.factors.try_emplace(key, std::move(out)).first->second;
}

}  // namespace detail

/// Full weight diagram of an irreducible representation. Memoized per
/// (group, highest weight); safe to call concurrently.
inline std::shared_ptr<const Character> irreducible_character(const IrrepLabel& label) {
  auto& cache = detail::character_cache();
  const auto key = std::make_pair(label.group.factors(), label.weight);
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.products.find(key); it != cache.products.end()) return it->second;
  }
  if (weyl_dim(label) > dimension_cap())
    throw ResourceLimit("representation of dimension " + std::to_string(weyl_dim(label)) +
                        " exceeds the dimension cap " + std::to_string(dimension_cap()));

  std::vector<std::vector<std::pair<Weight, Mult>>> parts;
  const auto& fs = label.group.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const int off = label.group.offset(i);
    Weight w(label.weight.begin() + off, label.weight.begin() + off + fs[i].rank);
    parts.push_back(*detail::factor_character(fs[i], w));
  }
  auto ch = std::make_shared<Character>();
  detail::for_each_product(parts, [&](const Weight& w, Mult m) { ch->emplace(w, m); });

  std::unique_lock lock(cache.mu);
  return cache.products.try_emplace(key, std::move(ch)).first->second;
}

inline Character weight_multiplicities(const IrrepLabel& label) { return *irreducible_character(label); }

}  // namespace thetacalc
