#include <gtest/gtest.h>

#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"
#include "qdc/sp1.hpp"
#include "test_support.hpp"

namespace qdc {
namespace {

using testing::omega;

SparseMatrix bracket(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

TEST(Sp1, OneFormTable) {
  EXPECT_EQ(act_on_one_form(Generator::I, 0, 1), (SignedIndex{1, 1}));
  EXPECT_EQ(act_on_one_form(Generator::I, 1, 1), (SignedIndex{-1, 0}));
  EXPECT_EQ(act_on_one_form(Generator::J, 1, 1), (SignedIndex{-1, 3}));
  EXPECT_EQ(act_on_one_form(Generator::J, 0, 1), (SignedIndex{1, 2}));
  EXPECT_EQ(act_on_one_form(Generator::K, 0, 1), (SignedIndex{1, 3}));
  EXPECT_EQ(act_on_one_form(Generator::K, 6, 2), (SignedIndex{-1, 5}));
  EXPECT_THROW(act_on_one_form(Generator::I, 4, 1), DomainError);
  EXPECT_THROW(act_on_one_form(Generator::I, -1, 1), DomainError);
}

TEST(Sp1, QuaternionRelationsOnOneForms) {
  // IJ = K as endomorphisms of T*, and each generator squares to -1.
  const Form e0 = one_form(2, 4);
  EXPECT_EQ(act(Generator::I, act(Generator::J, e0)), act(Generator::K, e0));
  for (Generator g : kGenerators) {
    for (int i = 0; i < 8; ++i) EXPECT_EQ(act(g, act(g, one_form(2, i))), -one_form(2, i));
  }
}

TEST(Sp1, MultiplicationTableOnSelfDualForms) {
  const Form w1 = omega(1, 1), w2 = omega(2, 1), w3 = omega(3, 1);
  EXPECT_TRUE(act(Generator::I, w1).is_zero());
  EXPECT_EQ(act(Generator::J, w1), w3 * Rational(-2));
  EXPECT_EQ(act(Generator::K, w1), w2 * Rational(2));
  EXPECT_EQ(act(Generator::I, w2), w3 * Rational(2));
  EXPECT_TRUE(act(Generator::J, w2).is_zero());
  EXPECT_EQ(act(Generator::K, w2), w1 * Rational(-2));
  // The printed table lists I(ω3+) = -2ω3+; with the action above the value
  // is -2ω2+, which is what the V_2 bracket relations force.
  EXPECT_EQ(act(Generator::I, w3), w2 * Rational(-2));
  EXPECT_NE(act(Generator::I, w3), w3 * Rational(-2));
  EXPECT_EQ(act(Generator::J, w3), w1 * Rational(2));
  EXPECT_TRUE(act(Generator::K, w3).is_zero());
}

TEST(Sp1, AntiSelfDualFormsAreInvariant) {
  for (int j = 1; j <= 3; ++j) {
    for (Generator g : kGenerators) EXPECT_TRUE(act(g, omega(j, -1)).is_zero());
    EXPECT_TRUE(casimir(omega(j, -1)).is_zero());
  }
  EXPECT_TRUE(act(Generator::I, basis_form(1, {0, 1, 2, 3})).is_zero());
}

TEST(Sp1, CasimirExamples) {
  EXPECT_EQ(casimir(one_form(1, 0)), one_form(1, 0) * Rational(-3));
  EXPECT_EQ(casimir(omega(1, 1)), omega(1, 1) * Rational(-8));
}

TEST(Sp1, BracketRelations) {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= 4 * n; ++k) {
      const SparseMatrix& i = action_matrix(n, k, Generator::I);
      const SparseMatrix& j = action_matrix(n, k, Generator::J);
      const SparseMatrix& kk = action_matrix(n, k, Generator::K);
      ASSERT_EQ(bracket(i, j), kk * Rational(2)) << "n=" << n << " k=" << k;
      ASSERT_EQ(bracket(j, kk), i * Rational(2)) << "n=" << n << " k=" << k;
      ASSERT_EQ(bracket(kk, i), j * Rational(2)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Sp1, CasimirCommutesWithGenerators) {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= 4 * n; ++k) {
      const SparseMatrix& c = casimir_matrix(n, k);
      for (Generator g : kGenerators) ASSERT_TRUE(bracket(c, action_matrix(n, k, g)).is_zero());
    }
  }
}

TEST(Sp1, CasimirOnTwoFormsOfH1IsMinusFourStarPlusOne) {
  const SparseMatrix star = operator_matrix(1, 2, 2, [](const Form& f) { return hodge_star(f); });
  EXPECT_EQ(casimir_matrix(1, 2), star.shifted(1) * Rational(-4));
}

TEST(Sp1, DerivationRule) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Form a = testing::random_form(rng, 2, rng() % 4, 1);
    const Form b = testing::random_form(rng, 2, rng() % 4, 1);
    for (Generator g : kGenerators) {
      ASSERT_EQ(act(g, wedge(a, b)), wedge(act(g, a), b) + wedge(a, act(g, b)));
    }
  }
}

TEST(Sp1, PreservesBlockGrading) {
  const ExteriorBasis& basis = ExteriorBasis::get(2, 3);
  for (MultiIndex idx : basis.elements()) {
    for (Generator g : kGenerators) {
      const Form image = act(g, Form::basis(2, idx));
      for (const auto& [out, c] : image.terms()) {
        ASSERT_EQ(basis.grading_of(out), basis.grading_of(idx));
      }
    }
  }
}

TEST(Sp1, PartialActionIgnoresBlockZero) {
  const Form a = basis_form(2, {0, 4});
  EXPECT_EQ(act(Generator::I, a, kOffBlockZero), basis_form(2, {0, 5}));
  EXPECT_EQ(act(Generator::I, a, kBlockZero), basis_form(2, {1, 4}));
  EXPECT_EQ(act(Generator::I, a, kOffBlockZero) + act(Generator::I, a, kBlockZero), act(Generator::I, a));
}

TEST(Sp1, CombinedActionIsComplexStructureOnOneForms) {
  // (aI + bJ + cK)^2 = -(a^2 + b^2 + c^2) on 1-forms.
  const Rational a(3, 5), b(4, 5), c(0);
  const SparseMatrix l = combined_action_matrix(1, 1, a, b, c);
  EXPECT_EQ(l * l, SparseMatrix::identity(4) * Rational(-1));
}

TEST(Sp1, ParseGenerator) {
  EXPECT_EQ(parse_generator("J"), Generator::J);
  EXPECT_THROW(parse_generator("L"), InputError);
}

}  // namespace
}  // namespace qdc
