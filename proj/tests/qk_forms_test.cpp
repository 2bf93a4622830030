#include <gtest/gtest.h>

#include <random>

#include "qdc/decomposition.hpp"
#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"
#include "qdc/qk_forms.hpp"
#include "test_support.hpp"

namespace qdc {
namespace {

using testing::omega;

TEST(QForm, UnitProducts) {
  EXPECT_EQ(unit_product(kI, kJ), (UnitProduct{1, kK}));
  EXPECT_EQ(unit_product(kJ, kI), (UnitProduct{-1, kK}));
  EXPECT_EQ(unit_product(kK, kK), (UnitProduct{-1, kOne}));
  EXPECT_EQ(unit_product(kK, kI), (UnitProduct{1, kJ}));
}

TEST(QForm, RightMultiplicationByI) {
  const QForm a(one_form(1, 0), one_form(1, 1), one_form(1, 2), one_form(1, 3));
  const QForm b = right_multiply(a, kI);
  EXPECT_EQ(b[0], -one_form(1, 1));
  EXPECT_EQ(b[1], one_form(1, 0));
  EXPECT_EQ(b[2], one_form(1, 3));
  EXPECT_EQ(b[3], -one_form(1, 2));
}

TEST(QForm, RightMultiplicationIsAssociative) {
  // α·(pq) = (α·p)·q over unit quaternions ±1, ±i, ±j, ±k.
  const QForm a(one_form(1, 0), one_form(1, 1) * Rational(2), one_form(1, 2) * Rational(-3), one_form(1, 3));
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      for (int sp : {1, -1}) {
        for (int sq : {1, -1}) {
          const UnitProduct pq = unit_product(p, q);
          const QForm lhs = right_multiply(a, pq.unit) * Rational(pq.sign * sp * sq);
          const QForm rhs = right_multiply(right_multiply(a, p) * Rational(sp), q) * Rational(sq);
          ASSERT_EQ(lhs, rhs);
        }
      }
    }
  }
}

TEST(QForm, LeftAndRightMultiplicationCommute) {
  const QForm a(one_form(1, 0), one_form(1, 1), Form(1, 1), one_form(1, 3));
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) ASSERT_EQ(right_multiply(left_multiply(p, a), q), left_multiply(p, right_multiply(a, q)));
  }
}

TEST(QkForms, KahlerFormsOnH1) {
  EXPECT_EQ(kahler_form(1, Generator::I), omega(1, 1));
  EXPECT_EQ(kahler_form(1, Generator::J), omega(2, 1));
  EXPECT_EQ(kahler_form(1, Generator::K), omega(3, 1));
}

TEST(QkForms, KahlerFormIsMetricDual) {
  // ω_g(e_i, e_j) = <g e_i, e_j>: the coefficient of e^{ij} (i < j) in ω_g
  // equals the e^j component of g(e^i).
  for (Generator g : kGenerators) {
    const Form w = kahler_form(2, g);
    for (int i = 0; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        const SignedIndex gi = act_on_one_form(g, i, 2);
        const Rational expected = gi.index == j ? gi.sign : 0;
        ASSERT_EQ(w.coefficient(MultiIndex{i, j}), Poly(expected));
      }
    }
  }
}

TEST(QkForms, StructuralFormsInvariants) {
  for (int n = 1; n <= 3; ++n) {
    const StructuralForms s = structural_forms(n);
    EXPECT_TRUE(casimir(s.Omega).is_zero());
    EXPECT_EQ(project(s.Omega, 0), s.Omega);
  }
  EXPECT_EQ(structural_forms(1).Omega, basis_form(1, {0, 1, 2, 3}) * Rational(6));
}

TEST(QkForms, PsiSquaredIsMinusOmega) {
  // Each unit squares to -1 and the mixed terms cancel pairwise, so
  // Ψ∧Ψ = -(ω_I² + ω_J² + ω_K²) = -Ω exactly; in particular not -2Ω.
  for (int n = 1; n <= 3; ++n) {
    const StructuralForms s = structural_forms(n);
    const QForm square = qwedge(s.Psi, s.Psi);
    EXPECT_EQ(square, QForm::times_unit(-s.Omega, kOne));
    EXPECT_NE(square, QForm::times_unit(s.Omega * Rational(-2), kOne));
  }
}

TEST(QkForms, EffectiveExamples) {
  EXPECT_TRUE(is_effective(one_form(2, 0)));
  EXPECT_FALSE(is_effective(basis_form(2, {0, 1, 2, 3})));
  EXPECT_TRUE(is_effective(Form(2, 3)));
  EXPECT_THROW(is_effective(Form(2, 7)), DomainError);
}

TEST(QkForms, DecomposeLowDegree) {
  const Form phi = basis_form(2, {0, 5, 6}) - basis_form(2, {1, 2, 7}) * Rational(3, 2);
  const auto parts = kraines_bonan_decompose(phi);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].mu, phi);
}

TEST(QkForms, DecomposeOmega) {
  const Form omega4 = structural_forms(2).Omega;
  const auto parts = kraines_bonan_decompose(omega4);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(parts[0].mu.is_zero());
  EXPECT_EQ(parts[1].mu, Form::function(2, Poly(1)));
}

TEST(QkForms, DecomposeVolumeOfBlock) {
  const Form phi = basis_form(2, {0, 1, 2, 3});
  const auto parts = kraines_bonan_decompose(phi);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(is_effective(parts[0].mu));
  EXPECT_TRUE(parts[1].mu.is_constant());
  EXPECT_FALSE(parts[1].mu.is_zero());
  EXPECT_EQ(kraines_bonan_recompose(2, 4, parts), phi);
}

TEST(QkForms, SystemIsSquareAndFullRank) {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= 2 * n + 2; ++k) {
      const BonanSystemReport report = kraines_bonan_system(n, k);
      EXPECT_TRUE(report.unique()) << n << ' ' << k;
      EXPECT_TRUE(report.exists()) << n << ' ' << k;
      EXPECT_EQ(report.stacked_columns(), static_cast<std::size_t>(report.ambient));
    }
  }
}

TEST(QkForms, RoundTripRandomForms) {
  std::mt19937_64 rng(41);
  for (int k = 0; k <= 6; ++k) {
    for (int trial = 0; trial < 25; ++trial) {
      const Form phi = testing::random_constant_form(rng, 2, k, 5);
      const auto parts = kraines_bonan_decompose(phi);
      for (const BonanPart& p : parts) ASSERT_TRUE(is_effective(p.mu));
      ASSERT_EQ(kraines_bonan_recompose(2, k, parts), phi);
    }
  }
}

TEST(QkForms, TopRowIsSumOfHolomorphicParts) {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 1; k <= 2 * n; ++k) {
      const SpaceBasis& top = eigenspace_basis(n, k, k);
      ASSERT_EQ(top.size(), (k + 1) * epsilon(n, k, k));
      std::vector<Form> all;
      for (const auto& [a, b, c] : sphere_sample_points()) {
        const SpaceBasis part = real_holomorphic_part(n, k, a, b, c);
        // Real form of Λ^{k,0} ⊕ Λ^{0,k}: twice C(2n, k).
        ASSERT_EQ(part.size(), 2 * binomial_half(2 * n, 2 * k));
        ASSERT_TRUE(top.contains_span(part)) << n << ' ' << k;
        all.insert(all.end(), part.vectors().begin(), part.vectors().end());
      }
      ASSERT_TRUE(SpaceBasis(n, k, all).contains_span(top)) << n << ' ' << k;
    }
  }
}

TEST(QkForms, HolomorphicPartRejectsOffSphere) {
  EXPECT_THROW(real_holomorphic_part(1, 1, Rational(1), Rational(1), Rational(0)), DomainError);
}

}  // namespace
}  // namespace qdc
