#include <gtest/gtest.h>

#include "spinlab/conjtest.hpp"
#include "spinlab/sampling.hpp"

using namespace spinlab;

TEST(Spin7, KnownTriples) {
  EXPECT_EQ(spin7_image(8, 4, 2), (std::vector<long>{7, 5, 3, 1}));
  EXPECT_EQ(spin7_image(6, 4, 2), (std::vector<long>{6, 4, 2, 0}));
  EXPECT_EQ(spin7_image(2, 0, 0), (std::vector<long>{1, 1, 1, 1}));
  EXPECT_THROW(spin7_image(1, 0, 0), DomainError);
  // conjugate under θ° iff some b_j = 0
  EXPECT_FALSE(spin7_orbit_discriminator(8, 4, 2));
  EXPECT_TRUE(spin7_orbit_discriminator(0, 0, 0));
  EXPECT_TRUE(spin7_orbit_discriminator(6, 4, 2));
  EXPECT_FALSE(spin7_orbit_discriminator(2, 0, 0));
}

TEST(Spin7, IrreducibilityLabels) {
  auto p = spin_minus_irreducibility_weight_check(4, Eps::Plus, 8, 4, 2);
  auto m = spin_minus_irreducibility_weight_check(4, Eps::Minus, 8, 4, 2);
  EXPECT_EQ(p.label(), "std+1");
  EXPECT_EQ(m.label(), "spin");
  EXPECT_THROW(spin_minus_irreducibility_weight_check(5, Eps::Plus, 8, 4, 2), UnsupportedError);
}

TEST(Unipotent, RegularFromPrincipalNilpotent) {
  for (int n = 3; n <= 5; ++n) {
    Mat u = exp_nilpotent(principal_nilpotent(n));
    EXPECT_TRUE(preserves_form(u, QuadSpace::even(n).gram_matrix()));
    EXPECT_TRUE(is_regular_unipotent_so(u));
    EXPECT_EQ(jordan_partition(u), (std::vector<int>{2 * n - 1, 1}));
    EXPECT_FALSE(is_regular_unipotent_so(root_unipotent(n)));
    EXPECT_FALSE(is_regular_unipotent_so(Mat::identity(2 * n)));
  }
  EXPECT_THROW(is_regular_unipotent_so(Mat::identity(3)), DimensionError);
}

TEST(Fingerprint, InnerConjugatesAgree) {
  int n = 4;
  QuadSpace V = QuadSpace::even(n);
  Rng rng(41);
  for (int t = 0; t < 4; ++t) {
    auto g = rng.torus(n).g;
    auto p = rng.gspin(V);
    EXPECT_TRUE(is_conjugate_gspin(g, p * g * p.inverse()));
    EXPECT_TRUE(is_conjugate_gpin(g, theta(g)));
  }
}

TEST(Fingerprint, SeparatesHalfSpinSwap) {
  // s = (1, 2, 3, 5, 7): θ moves it out of its W(D_4) orbit, so only the
  // half-spin characteristic polynomials tell g and θ(g) apart
  TorusCoordinates s{1, 2, 3, 5, 7};
  auto g = torus_from_coords(s).g;
  auto h = theta(g);
  EXPECT_EQ(charpoly(g.pr()), charpoly(h.pr()));
  EXPECT_FALSE(is_conjugate_gspin(g, h));
  EXPECT_TRUE(is_outer_conjugate(g, h));
  EXPECT_THROW(is_conjugate_gspin(g, GPinElement(CliffordElement::gen(QuadSpace::even(4), 1) +
                                                 CliffordElement::gen(QuadSpace::even(4), 5))),
               ParityError);
}
