#include <gtest/gtest.h>

#include "spinlab/exact_arith.hpp"

using namespace spinlab;

TEST(GaussRat, CanonicalText) {
  EXPECT_EQ(GaussRat(1).str(), "1+0*i");
  EXPECT_EQ((-GaussRat::i()).str(), "0-1*i");
  EXPECT_EQ(GaussRat(rat(-1, 2), rat(3, 4)).str(), "-1/2+3/4*i");
  EXPECT_EQ(GaussRat(rat(2, 4)).str(), "1/2+0*i");
}

TEST(GaussRat, LenientParse) {
  EXPECT_EQ(GaussRat::parse("3"), GaussRat(3));
  EXPECT_EQ(GaussRat::parse("-1/2"), GaussRat(rat(-1, 2)));
  EXPECT_EQ(GaussRat::parse("i"), GaussRat::i());
  EXPECT_EQ(GaussRat::parse("-2*i"), GaussRat(0, -2));
  EXPECT_EQ(GaussRat::parse("1/2-3/4*i"), GaussRat(rat(1, 2), rat(-3, 4)));
  EXPECT_EQ(GaussRat::parse(" 1 + 0*i "), GaussRat(1));
  for (auto& x : {GaussRat(rat(5, 7), rat(-2, 3)), GaussRat(0, 1), GaussRat(-4)})
    EXPECT_EQ(GaussRat::parse(x.str()), x);
}

TEST(GaussRat, ParseRejectsGarbage) {
  EXPECT_THROW(GaussRat::parse(""), ParseError);
  EXPECT_THROW(GaussRat::parse("1.5"), ParseError);
  EXPECT_THROW(GaussRat::parse("x"), ParseError);
  EXPECT_THROW(GaussRat::parse("1/0"), ParseError);
}

TEST(GaussRat, FieldOps) {
  GaussRat a(rat(1, 2), 3), b(-2, rat(1, 3));
  EXPECT_EQ(a * b, GaussRat(rat(-1, 1) - 1, rat(1, 6) - 6));
  EXPECT_EQ(a * a.inv(), GaussRat(1));
  EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
  EXPECT_EQ(GaussRat::i().pow(-1), -GaussRat::i());
  EXPECT_THROW(GaussRat().inv(), SingularError);
}

TEST(Mat, CharpolyKnown) {
  Mat m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  // x² − 4x + 3
  EXPECT_EQ(charpoly(m), Poly({3, -4, 1}));
  EXPECT_TRUE(charpoly(m)(m).is_zero());
  EXPECT_EQ(det(m), GaussRat(3));
}

TEST(Mat, CharpolyOfCompanionRecoversPolynomial) {
  // companion matrix of x³ − 2x² + (1/2)x + i
  Mat c(3, 3);
  c(1, 0) = 1;
  c(2, 1) = 1;
  c(0, 2) = -GaussRat::i();
  c(1, 2) = GaussRat(rat(-1, 2));
  c(2, 2) = 2;
  EXPECT_EQ(charpoly(c), Poly({GaussRat::i(), GaussRat(rat(1, 2)), GaussRat(-2), GaussRat(1)}));
}

TEST(Mat, CharpolyMatchesRoots) {
  std::vector<GaussRat> d{2, GaussRat::i(), GaussRat(rat(-1, 3)), 2};
  EXPECT_EQ(charpoly(Mat::diag(d)), Poly::from_roots(d));
}

TEST(Mat, RankDetInverse) {
  Mat m(3, 3);
  int v[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v[r][c];
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(det(m), GaussRat(0));
  EXPECT_THROW(inverse(m), SingularError);
  m(2, 2) = 10;
  EXPECT_EQ(det(m), GaussRat(-3));
  EXPECT_TRUE((inverse(m) * m).is_identity());
}

TEST(Mat, DimensionErrors) {
  Mat a(2, 3), b(2, 3);
  EXPECT_THROW(a * b, DimensionError);
  EXPECT_THROW(charpoly(a), DimensionError);
  EXPECT_THROW(det(a), DimensionError);
}

TEST(Mat, JordanPartition) {
  // J3 ⊕ J1 ⊕ J2
  Mat u = Mat::identity(6);
  u(0, 1) = 1;
  u(1, 2) = 1;
  u(4, 5) = 1;
  EXPECT_EQ(jordan_partition(u), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(jordan_partition(Mat::identity(4)), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_THROW(jordan_partition(GaussRat(2) * Mat::identity(2)), DomainError);
}

TEST(Mat, ExpNilpotent) {
  Mat n(3, 3);
  n(0, 1) = 1;
  n(1, 2) = 1;
  Mat e = exp_nilpotent(n);
  EXPECT_EQ(e(0, 2), GaussRat(rat(1, 2)));
  EXPECT_EQ(e(0, 1), GaussRat(1));
  EXPECT_EQ(jordan_partition(e), (std::vector<int>{3}));
  EXPECT_THROW(exp_nilpotent(Mat::identity(2)), DomainError);
}

TEST(Poly, Arithmetic) {
  Poly x = Poly::x();
  Poly p = (x - Poly::constant(1)) * (x + Poly::constant(1));
  EXPECT_EQ(p, Poly({-1, 0, 1}));
  EXPECT_EQ(p(GaussRat(3)), GaussRat(8));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.monic());
}
