#include <gtest/gtest.h>

#include "spinlab/sampling.hpp"
#include "spinlab/spinrep.hpp"

using namespace spinlab;

TEST(Fock, ContractionAndWedge) {
  QuadSpace V = QuadSpace::even(3);
  std::vector<GaussRat> vac(8), e12(8);
  vac[0] = 1;
  e12[0b11] = 1;
  // e1·1 = e1, e4 kills the vacuum, e4(e1∧e2) = e2
  std::vector<GaussRat> want(8);
  want[1] = 1;
  EXPECT_EQ(act(CliffordElement::gen(V, 1), vac), want);
  EXPECT_EQ(act(CliffordElement::gen(V, 4), vac), std::vector<GaussRat>(8));
  std::vector<GaussRat> e2(8);
  e2[0b10] = 1;
  EXPECT_EQ(act(CliffordElement::gen(V, 4), e12), e2);
  EXPECT_THROW(act(CliffordElement::gen(V, 1), std::vector<GaussRat>(4)), DimensionError);
}

TEST(Fock, ActionIsAnAlgebraMap) {
  for (int n = 3; n <= 4; ++n) {
    QuadSpace V = QuadSpace::even(n);
    Rng rng = Rng::derive(1, "fock", n);
    for (int t = 0; t < 5; ++t) {
      auto x = rng.gpin(V).value(), y = rng.gpin(V).value();
      EXPECT_EQ(fock_matrix_unsigned(x * y), fock_matrix_unsigned(x) * fock_matrix_unsigned(y));
    }
  }
}

TEST(HalfSpin, RejectsWrongInput) {
  QuadSpace V = QuadSpace::even(3);
  GPinElement v(CliffordElement::gen(V, 1) + CliffordElement::gen(V, 4));
  EXPECT_THROW(half_spin_matrix(v, Eps::Plus), ParityError);
  GPinElement w(CliffordElement::gen(QuadSpace::odd(3), 5));
  EXPECT_THROW(half_spin_matrix(w, Eps::Plus), SpaceMismatch);
}

TEST(HalfSpin, PsiIntertwinesOddSpinWithPlus) {
  for (int n = 3; n <= 5; ++n) {
    QuadSpace W = QuadSpace::odd(n);
    Mat P = psi_matrix(n);
    EXPECT_EQ(rank(P), P.rows());
    Rng rng = Rng::derive(4, "psi", n);
    for (int t = 0; t < 4; ++t) {
      auto g = rng.gspin(W);
      EXPECT_EQ(half_spin_matrix(i_std(g), Eps::Plus).mat * P, P * spin_matrix(g).mat) << "n=" << n;
    }
  }
}

TEST(HalfSpin, ThetaIntertwinerIsMinusIUpToSign) {
  for (int n = 3; n <= 5; ++n) {
    GaussRat c;
    ASSERT_TRUE(theta_intertwiner(n).is_scalar(&c));
    EXPECT_TRUE(c == GaussRat::i() || c == -GaussRat::i());
    Mat T = theta_intertwiner(n);
    Rng rng = Rng::derive(6, "theta", n);
    auto g = rng.gspin_mixed(n);
    EXPECT_EQ(T * half_spin_matrix(g, Eps::Plus).mat, half_spin_matrix(theta(g), Eps::Minus).mat * T);
  }
}

TEST(Pairing, SymmetryPattern) {
  // symmetric for n ≡ 0, 1 mod 4, alternating for n ≡ 2, 3
  for (int n = 2; n <= 6; ++n) {
    Mat J = pairing_gram(n);
    bool alt = n % 4 == 2 || n % 4 == 3;
    if (alt)
      EXPECT_EQ(J.transpose(), GaussRat(-1) * J) << n;
    else
      EXPECT_EQ(J.transpose(), J) << n;
    EXPECT_EQ(rank(J), J.rows());
  }
  EXPECT_EQ(pairing_unsigned(3, 0, 0b111), GaussRat(1));
  EXPECT_TRUE(pairing_unsigned(3, 0b1, 0b1).is_zero());
}

TEST(Pairing, SpinIsASimilitude) {
  int n = 4;
  QuadSpace V = QuadSpace::even(n);
  Mat J = pairing_gram(n);
  Rng rng(31);
  for (int t = 0; t < 4; ++t) {
    auto g = rng.gpin(V);
    Mat S = spin_matrix(g).mat;
    EXPECT_EQ(S.transpose() * J * S, g.norm() * J);
  }
}

TEST(Pairing, VacuumIsKilledByLastCoordinate) {
  // e_2n b_U = 0 for every U ⊂ {1..n-1}: b_U avoids e_n
  for (int n = 3; n <= 4; ++n) {
    QuadSpace V = QuadSpace::even(n);
    std::size_t d = std::size_t{1} << n;
    for (Subset U = 0; U < (1u << (n - 1)); ++U) {
      std::vector<GaussRat> b(d);
      b[U] = 1;
      EXPECT_EQ(act(CliffordElement::gen(V, 2 * n), b), std::vector<GaussRat>(d));
    }
  }
}
