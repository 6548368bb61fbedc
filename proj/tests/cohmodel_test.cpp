#include <gtest/gtest.h>

#include "gwq/cohmodel.hpp"
#include "gwq/errors.hpp"

using namespace gwq;

namespace {

std::vector<RingModel> desk_models() {
  return {RingModel::projective(1), RingModel::projective(3), RingModel::product(1, 1),
          RingModel::product(1, 2), RingModel::product(2, 2), RingModel::grassmannian(2, 4),
          RingModel::grassmannian(2, 5), RingModel::grassmannian(3, 6)};
}

}  // namespace

TEST(RingModel, IdsAndDimensions) {
  EXPECT_EQ(RingModel::projective(3).id(), "P3");
  EXPECT_EQ(RingModel::product(1, 2).id(), "P1xP2");
  EXPECT_EQ(RingModel::grassmannian(2, 4).id(), "Gr(2,4)");
  EXPECT_EQ(RingModel::projective(3).size(), 4u);
  EXPECT_EQ(RingModel::product(2, 3).size(), 12u);
  EXPECT_EQ(RingModel::grassmannian(2, 5).size(), 10u);
  EXPECT_EQ(RingModel::grassmannian(2, 5).complex_dimension(), 6);
  EXPECT_THROW(RingModel::projective(0), ParameterError);
  EXPECT_THROW(RingModel::grassmannian(4, 4), ParameterError);
}

TEST(RingModel, BasisEndsAtPoint) {
  for (const auto& X : desk_models()) {
    EXPECT_EQ(X.fundamental().codim(), 0);
    EXPECT_EQ(X.point().codim(), X.complex_dimension());
    for (std::size_t i = 1; i < X.size(); ++i) EXPECT_LE(X.at(i - 1).codim(), X.at(i).codim());
  }
}

TEST(RingModel, CupIsCommutativeAssociativeFrobenius) {
  for (const auto& X : desk_models()) {
    for (const auto& a : X.basis())
      for (const auto& b : X.basis()) {
        EXPECT_EQ(X.cup(a, b), X.cup(b, a)) << X.id();
        for (const auto& c : X.basis()) {
          EXPECT_EQ(X.cup(X.cup(a, b), ClassVector(c)), X.cup(ClassVector(a), X.cup(b, c))) << X.id();
          EXPECT_EQ(X.pairing(X.cup(a, b), c), X.pairing(a, X.cup(b, c))) << X.id();
        }
      }
  }
}

TEST(RingModel, UnitAndPointPairing) {
  for (const auto& X : desk_models()) {
    for (const auto& a : X.basis()) EXPECT_EQ(X.cup(X.fundamental(), a), ClassVector(a));
    EXPECT_EQ(X.pairing(X.fundamental(), X.point()), 1);
  }
}

TEST(RingModel, InversePairingIsInverse) {
  for (const auto& X : desk_models()) {
    const auto& g = X.pairing_matrix();
    const auto& h = X.inverse_pairing();
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = 0; j < X.size(); ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < X.size(); ++l) s += g[i][l] * h[l][j];
        EXPECT_EQ(s, i == j ? 1 : 0);
      }
  }
}

TEST(RingModel, ClassicalNumbers) {
  auto G = RingModel::grassmannian(2, 4);
  ClassVector s1 = G.basis()[1];
  ClassVector p = s1;
  for (int i = 0; i < 3; ++i) p = G.cup(p, s1);
  EXPECT_EQ(p.coefficient(G.point()), 2);  // four lines meet two lines

  auto P = RingModel::product(2, 2);
  ClassVector h = P.c1();  // 3 H1 + 3 H2
  ClassVector top = h;
  for (int i = 0; i < 3; ++i) top = P.cup(top, h);
  EXPECT_EQ(top.coefficient(P.point()), 486);  // 3^4 * binom(4,2)
}

TEST(RingModel, FirstChernClassAndExpectedDimension) {
  EXPECT_EQ(RingModel::projective(2).c1_dot(CurveClass{3}), 9);
  EXPECT_EQ(RingModel::product(1, 2).c1_dot(CurveClass{1, 1}), 5);
  EXPECT_EQ(RingModel::grassmannian(2, 4).c1_dot(CurveClass{1}), 4);
  // (3 - dim)(g - 1) + c1.A + k
  EXPECT_EQ(RingModel::projective(2).expected_dim(0, 8, CurveClass{3}), 16);
  EXPECT_EQ(RingModel::projective(3).expected_dim(2, 0, CurveClass{1}), 4);
}

TEST(RingModel, CurveClassChecks) {
  auto P = RingModel::product(1, 1);
  EXPECT_NO_THROW(P.check_curve_class(CurveClass{0, 2}));
  EXPECT_THROW(P.check_curve_class(CurveClass{2}), ParameterError);
  EXPECT_THROW(P.check_curve_class(CurveClass{-1, 2}), ParameterError);
  EXPECT_THROW(RingModel::projective(2).check_curve_class(CurveClass{-1}), ParameterError);
}

TEST(RingModel, DivisorDegree) {
  auto P = RingModel::product(1, 2);
  std::size_t h1 = P.index_of(BasisClass{{1, 0}});
  std::size_t h2 = P.index_of(BasisClass{{0, 1}});
  EXPECT_EQ(P.divisor_degree(h1, CurveClass{2, 3}), 2);
  EXPECT_EQ(P.divisor_degree(h2, CurveClass{2, 3}), 3);
  EXPECT_THROW(P.index_of(BasisClass{{2, 0}}), ParameterError);
}
