#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "thetacalc/repcalc.hpp"

using namespace thetacalc;

namespace {

const GroupSpec& c4() {
  static const GroupSpec g = GroupSpec::C(4);
  return g;
}

VirtualRep irr(const GroupSpec& g, Weight w, Mult m = 1) { return VirtualRep::irrep(IrrepLabel(g, std::move(w)), m); }

Mult binom(Mult n, Mult k) {
  Mult r = 1;
  for (Mult i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Repcalc, StandardSquaredOfSp8) {
  const auto v = irr(c4(), {1, 0, 0, 0});
  EXPECT_EQ(tensor(v, v), irr(c4(), {2, 0, 0, 0}) + irr(c4(), {0, 1, 0, 0}) + VirtualRep::trivial(c4()));
  EXPECT_EQ(sym2(v), irr(c4(), {2, 0, 0, 0}));
  EXPECT_EQ(alt2(v), irr(c4(), {0, 1, 0, 0}) + VirtualRep::trivial(c4()));
}

TEST(Repcalc, ExteriorPowersMatchSubsetEnumeration) {
  const auto v = irr(c4(), {1, 0, 0, 0});
  for (int k = 0; k <= 8; ++k) {
    const auto lam = exterior_power(v, k);
    EXPECT_EQ(lam.character(), oracle::exterior_of_standard_c(4, k)) << "k=" << k;
    EXPECT_EQ(lam, standard_exterior(c4(), k));
    EXPECT_EQ(lam.dim(), binom(8, k));
  }
  EXPECT_EQ(exterior_power(v, 3), irr(c4(), {0, 0, 1, 0}) + irr(c4(), {1, 0, 0, 0}));
  EXPECT_EQ(exterior_power(v, 4), irr(c4(), {0, 0, 0, 1}) + irr(c4(), {0, 1, 0, 0}) + VirtualRep::trivial(c4()));
}

TEST(Repcalc, SymmetricPowersMatchMultisetEnumeration) {
  const auto v = irr(GroupSpec::C(3), {1, 0, 0});
  for (int k = 0; k <= 4; ++k) {
    const auto s = symmetric_power(v, k);
    EXPECT_EQ(s.character(), oracle::symmetric_of_standard_c(3, k));
    EXPECT_EQ(s, irr(GroupSpec::C(3), {k, 0, 0}));
  }
}

TEST(Repcalc, AdamsIsSymMinusAlt) {
  gen::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto g = gen::small_group(rng);
    const auto v = irr(g, gen::bounded_weight(rng, g, 200));
    EXPECT_EQ(sym2(v) - alt2(v), adams(2, v));
    EXPECT_EQ(sym2(v) + alt2(v), tensor(v, v));
  }
}

TEST(Repcalc, TensorIsCommutativeAndAssociative) {
  gen::Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const auto g = gen::small_group(rng);
    const auto a = gen::random_effective(rng, g, 2, 30);
    const auto b = gen::random_effective(rng, g, 2, 30);
    const auto c = gen::random_effective(rng, g, 1, 20);
    EXPECT_EQ(tensor(a, b), tensor(b, a));
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
    EXPECT_EQ(tensor(a, b).dim(), a.dim() * b.dim());
    EXPECT_EQ(tensor(a, VirtualRep::trivial(g)), a);
  }
}

TEST(Repcalc, ProductGroupsFactorise) {
  const auto g = c4().times(GroupSpec::C(5));
  const auto b = irr(g, {0, 0, 0, 0, 1, 0, 0, 0, 0});
  EXPECT_EQ(sym2(b), irr(g, {0, 0, 0, 0, 2, 0, 0, 0, 0}));
  EXPECT_EQ(alt2(b), irr(g, {0, 0, 0, 0, 0, 1, 0, 0, 0}) + VirtualRep::trivial(g));
  const auto x = irr(g, {1, 0, 0, 0, 1, 0, 0, 0, 0});
  EXPECT_EQ(x.dim(), 80);
  EXPECT_EQ(inflate(irr(c4(), {0, 1, 0, 0}), g), irr(g, {0, 1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(standard_exterior(g, 2), irr(g, {0, 1, 0, 0, 0, 0, 0, 0, 0}) + VirtualRep::trivial(g));
}

TEST(Repcalc, DecomposeRejectsNonInvariantCharacters) {
  Character c{{{1, 0, 0, 0}, 1}};
  EXPECT_THROW(decompose(c4(), c), NonInvariantCharacter);
  EXPECT_EQ(decompose(c4(), oracle::exterior_of_standard_c(4, 2)), irr(c4(), {0, 1, 0, 0}) + VirtualRep::trivial(c4()));
}

TEST(Repcalc, VirtualArithmetic) {
  auto a = irr(c4(), {1, 0, 0, 0}, 2);
  a -= irr(c4(), {1, 0, 0, 0}, 3);
  EXPECT_FALSE(a.effective());
  EXPECT_EQ(a.dim(), -8);
  a += irr(c4(), {1, 0, 0, 0});
  EXPECT_TRUE(a.empty());
  EXPECT_THROW(irr(c4(), {1, 0, 0, 0}) + irr(GroupSpec::C(3), {1, 0, 0}), GroupMismatch);
}

TEST(Repcalc, Formatting) {
  EXPECT_EQ(format_weight(c4(), {0, 0, 1, 0}), "0010");
  EXPECT_EQ(format_weight(c4(), {1, 0, 12, 0}), "1,0,12,0");
  EXPECT_EQ(format_weight(c4().times(GroupSpec::C(5)), {0, 0, 1, 0, 1, 0, 0, 0, 0}), "0010|10000");
  EXPECT_EQ(format_weight(GroupSpec::C(10), Weight(10, 0)), "0,0,0,0,0,0,0,0,0,0");
  EXPECT_EQ(format_rep(VirtualRep::trivial(c4()) + irr(c4(), {0, 1, 0, 0}, 2)), "(0000) + (0100)^2");
  EXPECT_EQ(format_rep(VirtualRep(c4())), "0");
}
