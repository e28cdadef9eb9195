#pragma once

// Randomised property checks shared by the gtest suite and the acceptance
// runner. Each returns the number of failing trials and a description of the
// first failure.

#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "thetacalc/graded_super.hpp"
#include "thetacalc/nilfilt.hpp"

namespace props {

struct Outcome {
  int trials = 0;
  int failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++trials;
    if (ok) return;
    if (!failures) first = what;
    ++failures;
  }
  bool ok() const { return failures == 0; }
};

using namespace thetacalc;

/// graded tensor square = super S^2 + super Lambda^2.
inline Outcome tensor_splits(int n, std::uint64_t seed) {
  gen::Rng rng(seed);
  Outcome o;
  for (int t = 0; t < n; ++t) {
    const auto g = gen::small_group(rng);
    const auto x = gen::random_graded(rng, g);
    o.check(graded_tensor(x, x) == super_sym2(x) + super_alt2(x), g.name() + " trial " + std::to_string(t));
  }
  return o;
}

inline Outcome square_dimensions(int n, std::uint64_t seed) {
  gen::Rng rng(seed);
  Outcome o;
  for (int t = 0; t < n; ++t) {
    const auto g = gen::small_group(rng);
    const IrrepLabel l(g, gen::bounded_weight(rng, g, 300, 3));
    const VirtualRep v = VirtualRep::irrep(l);
    const Mult d = weyl_dim(l);
    const VirtualRep s = sym2(v), a = alt2(v);
    o.check(s.effective() && a.effective() && s.dim() + a.dim() == d * d && s.dim() == d * (d + 1) / 2,
            g.name() + " (" + format_weight(g, l.weight) + ")");
  }
  return o;
}

/// Irreducibles of Sp(2n) are self-dual, so v (x) v contains the trivial
/// representation exactly once.
inline Outcome trivial_once(int n, std::uint64_t seed) {
  gen::Rng rng(seed);
  Outcome o;
  for (int t = 0; t < n; ++t) {
    const auto g = gen::type_c_group(rng);
    const IrrepLabel l(g, gen::bounded_weight(rng, g, 400, 3));
    const VirtualRep v = VirtualRep::irrep(l);
    o.check(tensor(v, v).multiplicity(zero_weight(g)) == 1, g.name() + " (" + format_weight(g, l.weight) + ")");
  }
  return o;
}

/// Gr symmetry, rank consistency and agreement with the kernel/image construction.
inline Outcome nilpotent_filtrations(int n, std::uint64_t seed) {
  oracle::Rng rng(seed);
  Outcome o;
  for (int t = 0; t < n; ++t) {
    const std::size_t dim = 1 + rng() % 12;
    const auto m = oracle::random_nilpotent(rng, dim);
    const auto f = monodromy_filtration(m);
    bool ok = f.dimension == static_cast<int>(dim);
    for (const auto& [i, d] : f.gr) ok = ok && f.gr_dim(-i) == d;
    for (const auto& [k, d] : f.primitive) ok = ok && d > 0;
    // dim Gr_{-i} = sum_k dim P_{-i-2k}
    for (const auto& [i, d] : f.gr) {
      if (i > 0) continue;
      int s = 0;
      for (int k = -i; k <= f.top(); k += 2) s += f.primitive_dim(k);
      ok = ok && s == d;
    }
    // rank N^k = sum over blocks of max(0, size - k)
    const auto ranks = power_ranks(m);
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      std::size_t expected = 0;
      for (int b : f.jordan_blocks) expected += static_cast<std::size_t>(std::max(0, b - static_cast<int>(k)));
      ok = ok && ranks[k] == expected;
    }
    ok = ok && oracle::deligne_gr(m) == f.gr;
    o.check(ok, "n=" + std::to_string(dim) + " trial " + std::to_string(t));
  }
  return o;
}

inline Outcome package_identity(int n, std::uint64_t seed) {
  gen::Rng rng(seed);
  Outcome o;
  for (int t = 0; t < n; ++t) {
    const auto g = gen::small_group(rng);
    const auto x = expand(gen::random_packages(rng, g), g);
    bool ok = false;
    try {
      ok = expand(package_decompose(x), g) == x;
    } catch (const Error&) {
    }
    o.check(ok, g.name() + " trial " + std::to_string(t));
  }
  return o;
}

}  // namespace props
