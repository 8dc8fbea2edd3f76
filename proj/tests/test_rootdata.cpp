#include <gtest/gtest.h>

#include <set>

#include "spinlab/sampling.hpp"

using namespace spinlab;

TEST(Roots, CountsAndSymmetry) {
  for (int n = 3; n <= 6; ++n) {
    auto R = roots(n);
    EXPECT_EQ(static_cast<int>(R.size()), 2 * n * (n - 1));
    std::set<WeightVector> S(R.begin(), R.end());
    for (auto& r : R) {
      WeightVector m(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) m[k] = -r[k];
      EXPECT_TRUE(S.count(m));
      EXPECT_EQ(pair_weights(r, coroot_of(r)), 2);
    }
    EXPECT_EQ(coroots(n).size(), R.size());
  }
}

TEST(Roots, CartanMatrixD4) {
  auto a = simple_roots(4), c = simple_coroots(4);
  long want[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(pair_weights(a[i], c[j]), want[j][i]) << i << j;
}

TEST(Weyl, OrderAndComposition) {
  // |W(D_n)| = 2^{n−1} n!
  EXPECT_EQ(WeylElement::all(3).size(), 24u);
  EXPECT_EQ(WeylElement::all(4).size(), 192u);
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    auto u = rng.weyl(5), w = rng.weyl(5);
    auto s = rng.torus_coords(5);
    EXPECT_EQ(weyl_act(u * w, s), weyl_act(u, weyl_act(w, s)));
    EXPECT_EQ(u * WeylElement::identity(5), u);
  }
}

TEST(Weyl, ActionMatchesConjugationOnTorus) {
  Rng rng(9);
  auto te = rng.torus(4);
  auto w = rng.weyl(4);
  auto moved = torus_from_coords(weyl_act(w, te.s));
  EXPECT_EQ(charpoly(moved.g.pr()), charpoly(te.g.pr()));
  EXPECT_EQ(moved.g.norm(), te.g.norm());
}

TEST(Torus, CoordinatesRoundTrip) {
  for (int n = 3; n <= 5; ++n) {
    Rng rng = Rng::derive(2, "torus", n);
    for (int t = 0; t < 5; ++t) {
      auto te = rng.torus(n);
      EXPECT_EQ(torus_coords_of(te.g), te.s);
      GaussRat N = te.s[0] * te.s[0];
      for (int i = 1; i <= n; ++i) N *= te.s[i];
      EXPECT_EQ(te.g.norm(), N);
    }
  }
  QuadSpace V = QuadSpace::even(3);
  EXPECT_THROW(torus_coords_of(GPinElement(CliffordElement::gen(V, 1) + CliffordElement::gen(V, 4))), DomainError);
}

TEST(Torus, SpinWeightsAndDominant) {
  for (int n = 3; n <= 5; ++n)
    for (Eps e : {Eps::Plus, Eps::Minus}) {
      auto ws = spin_weights(n, e);
      EXPECT_EQ(ws.size(), std::size_t{1} << (n - 1));
      auto dom = dominant_members(ws);
      ASSERT_EQ(dom.size(), 1u);
      EXPECT_EQ(dom[0], mu_eps(n, e));
    }
}

TEST(Center, Structures) {
  EXPECT_EQ(center(GroupTag::SO, 3).structure, "Z/2");
  EXPECT_EQ(center(GroupTag::GSpin, 3).structure, "Gm x Z/2");
  EXPECT_EQ(center(GroupTag::GSO, 4).structure, "Gm");
  auto odd = center(GroupTag::Spin, 3);
  EXPECT_EQ(odd.structure, "Z/4");
  ASSERT_EQ(odd.generators.size(), 1u);
  EXPECT_EQ(odd.generators[0], (TorusCoordinates{GaussRat::i(), -1}));
  EXPECT_EQ(center(GroupTag::Spin, 4).structure, "(Z/2)^2");
  EXPECT_EQ(center(GroupTag::Spin, 6).structure, "(Z/2)^2");
  for (auto& z : odd.torsion) EXPECT_EQ(center_element(3, z[0], z[1]).g.norm(), GaussRat(1));
}

TEST(Center, ZEpsKillsHalfSpin) {
  int n = 4;
  for (Eps e : {Eps::Plus, Eps::Minus}) {
    auto [a, b] = z_eps(e);
    auto g = center_element(n, a, b).g;
    EXPECT_TRUE(half_spin_matrix(g, e).mat.is_identity());
    EXPECT_FALSE(half_spin_matrix(g, eps_neg(e)).mat.is_identity());
  }
  GaussRat c;
  auto g = center_element(n, GaussRat(3), GaussRat(-1)).g;
  ASSERT_TRUE(half_spin_matrix(g, Eps::Plus).mat.is_scalar(&c));
  EXPECT_EQ(c, central_char(n, Eps::Plus, 3, -1));
  EXPECT_THROW(central_char(n, Eps::Plus, 3, 2), DomainError);
}

TEST(Theta, OnCoordinatesIsInvolutive) {
  Rng rng(12);
  auto s = rng.torus_coords(4);
  EXPECT_EQ(theta_on_coords(theta_on_coords(s)), s);
  auto te = torus_from_coords(s);
  EXPECT_EQ(torus_coords_of(theta(te.g)), theta_on_coords(s));
}
