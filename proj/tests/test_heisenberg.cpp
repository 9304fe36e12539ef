// Copyright 2026 The gframe Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gframe/heisenberg.hpp"

namespace gframe {
namespace {

using cd = std::complex<double>;
using Model = CenterTranslateModel<double>;

constexpr double kPi = std::numbers::pi;

// integral_eps^1 alpha^d exp(i omega alpha) d alpha, by the recursion
// I_d = [alpha^d e^{i omega alpha} / (i omega)]_eps^1 - d / (i omega) I_{d-1}.
cd moment_oracle(double eps, int d, double omega) {
  if (omega == 0.0) return (1.0 - std::pow(eps, d + 1)) / (d + 1);
  const cd iw(0.0, omega);
  cd value = (std::exp(iw) - std::exp(iw * eps)) / iw;
  for (int k = 1; k <= d; ++k) {
    value = (std::exp(iw) - std::pow(eps, k) * std::exp(iw * eps)) / iw -
            double(k) / iw * value;
  }
  return value;
}

TranslateSum<double> delta(Index k) {
  TranslateSum<double> a;
  a.offset = k;
  a.coefficients = ComplexVector<double>::Ones(1);
  return a;
}

TranslateSum<double> random_sequence(std::mt19937_64& rng, Index range) {
  TranslateSum<double> a;
  a.offset = -range;
  a.coefficients = random_complex<double>(2 * range + 1, 1, rng);
  return a;
}

TEST(HsWeightTest, Examples) {
  EXPECT_DOUBLE_EQ(hs_weight(0.5, 1, 0.75), 0.75);
  EXPECT_EQ(hs_weight(0.5, 1, 0.25), 0.0);
  EXPECT_DOUBLE_EQ(hs_weight(0.5, 2, 1.0), 1.0);
  // The indicator is open at eps.
  EXPECT_EQ(hs_weight(0.5, 1, 0.5), 0.0);
}

TEST(HsWeightTest, RejectsAlphaOutsideUnitInterval) {
  EXPECT_THROW(hs_weight(0.5, 1, 0.0), ArgumentError);
  EXPECT_THROW(hs_weight(0.5, 1, 1.5), ArgumentError);
  EXPECT_THROW(hs_weight(0.5, 1, -0.2), ArgumentError);
  EXPECT_THROW(hs_weight(1.5, 1, 0.5), ArgumentError);
  EXPECT_THROW(hs_weight(0.5, -1, 0.5), ArgumentError);
}

TEST(HsWeightTest, DefiningSumMatchesClosedForm) {
  const auto grid = AlphaGrid<double>::midpoint(1000);
  for (double eps : {0.0, 0.1, 0.37, 0.5, 0.9}) {
    for (int d : {0, 1, 2, 3, 5}) {
      for (Index i = 0; i < grid.size(); ++i) {
        const double a = grid.nodes(i);
        const double closed = a > eps ? std::pow(a, d) : 0.0;
        ASSERT_NEAR(hs_weight(eps, d, a), closed, 1e-12);
        ASSERT_EQ(hs_weight_closed(eps, d, a), closed);
      }
    }
  }
}

TEST(HsFieldTest, NormProfileIsZeroOrOne) {
  const RankOneHSField<double> field(0.3, 2);
  for (double a = -2.5; a <= 2.5; a += 0.01) {
    const double hs = field.hs_norm(a);
    EXPECT_TRUE(hs == 0.0 || hs == 1.0);
    EXPECT_EQ(hs, (a > 0.3 && a <= 1.0) ? 1.0 : 0.0);
  }
}

TEST(QuadratureTest, GaussLegendreTwoPointNodes) {
  const auto [nodes, weights] = gauss_legendre_rule<double>(2);
  EXPECT_NEAR(nodes(0), -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(nodes(1), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(weights(0), 1.0, 1e-15);
  EXPECT_NEAR(weights(1), 1.0, 1e-15);
}

TEST(QuadratureTest, GaussLegendreIsExactToDegreeTwoNMinusOne) {
  const Index order = 6;
  const auto [nodes, weights] = gauss_legendre_rule<double>(order);
  for (int p = 0; p < 2 * order; ++p) {
    double q = 0.0;
    for (Index i = 0; i < order; ++i) q += weights(i) * std::pow(nodes(i), p);
    const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
    EXPECT_NEAR(q, exact, 1e-14) << "p=" << p;
  }
}

TEST(QuadratureTest, CompositeRuleCoversUnitInterval) {
  const auto grid = AlphaGrid<double>::gauss_legendre(0.3, 40, 5);
  EXPECT_NEAR(grid.weights.sum(), 1.0, 1e-14);
  EXPECT_GT(grid.nodes.minCoeff(), 0.0);
  EXPECT_LT(grid.nodes.maxCoeff(), 1.0);
  EXPECT_THROW(AlphaGrid<double>::gauss_legendre(1.2, 40, 5), ArgumentError);
  EXPECT_THROW(AlphaGrid<double>::midpoint(0), ArgumentError);
}

TEST(PsiNormTest, Examples) {
  EXPECT_NEAR(psi_norm_sq(0.5, 1), 0.375, 1e-9);
  EXPECT_DOUBLE_EQ(psi_norm_sq_closed(0.5, 1), 0.375);
  EXPECT_NEAR(psi_norm_sq(0.0, 0), 1.0, 1e-12);
  EXPECT_EQ(psi_norm_sq(1.0, 2), 0.0);
  EXPECT_LT(psi_norm_sq(0.999, 2), 1e-2);
}

TEST(PsiNormTest, MatchesClosedForm) {
  for (double eps : {0.01, 0.1, 0.25, 0.5, 0.77, 0.9}) {
    for (int d : {1, 2, 3, 4, 6}) {
      EXPECT_NEAR(psi_norm_sq(eps, d), psi_norm_sq_closed(eps, d), 1e-12)
          << "eps=" << eps << " d=" << d;
    }
  }
}

TEST(LemmaBoundsTest, Examples) {
  const auto grid = AlphaGrid<double>::midpoint(4096);
  const auto a = lemma_bounds_check(0.5, 1, grid);
  EXPECT_TRUE(a.holds);
  EXPECT_GE(a.min, 0.5);
  EXPECT_LT(a.min, 0.5 + 1e-3);
  EXPECT_LE(a.max, 1.0);
  EXPECT_GT(a.max, 1.0 - 1e-3);
  EXPECT_EQ(a.support_size, 2048);

  const auto b = lemma_bounds_check(0.9, 3, grid);
  EXPECT_TRUE(b.holds);
  EXPECT_GE(b.min, 0.729);
  EXPECT_NEAR(b.lower_limit, 0.729, 1e-15);

  const auto c = lemma_bounds_check(0.4, 0, grid);
  EXPECT_EQ(c.min, 1.0);
  EXPECT_EQ(c.max, 1.0);
}

TEST(LemmaBoundsTest, EmptySupportThrows) {
  EXPECT_THROW(lemma_bounds_check(1.0, 2, AlphaGrid<double>::midpoint(64)),
               PreconditionError);
  // All nodes at or below eps.
  AlphaGrid<double> grid;
  grid.nodes = RealVector<double>::Constant(3, 0.2);
  grid.weights = RealVector<double>::Constant(3, 1.0 / 3.0);
  EXPECT_THROW(lemma_bounds_check(0.5, 1, grid), PreconditionError);
}

TEST(LemmaBoundsTest, SandwichOverParameterGrid) {
  const auto grid = AlphaGrid<double>::midpoint(4096);
  for (double eps : {0.1, 0.5, 0.9}) {
    for (int d : {1, 2, 3}) {
      const auto r = lemma_bounds_check(eps, d, grid);
      EXPECT_TRUE(r.holds);
      EXPECT_GE(r.min, std::pow(eps, d) - 1e-12);
      EXPECT_LE(r.max, 1.0 + 1e-12);
    }
  }
}

TEST(LemmaBoundsTest, EpsMonotonicity) {
  const auto grid = AlphaGrid<double>::midpoint(2048);
  const int d = 2;
  double previous = 2.0;
  Index previous_support = 0;
  for (double eps : {0.9, 0.7, 0.5, 0.3, 0.1}) {
    const auto r = lemma_bounds_check(eps, d, grid);
    EXPECT_LE(r.min, previous);
    EXPECT_GT(r.support_size, previous_support);
    previous = r.min;
    previous_support = r.support_size;
  }
  // Refinement drives the minimum over E down to eps^d.
  double gap = 1.0;
  for (Index n : {64, 256, 1024, 4096}) {
    const auto r = lemma_bounds_check(0.3, d, AlphaGrid<double>::midpoint(n));
    const double g = r.min - std::pow(0.3, d);
    EXPECT_LT(g, gap);
    EXPECT_GE(g, 0.0);
    gap = g;
  }
}

class CenterTranslateTest : public ::testing::Test {
 protected:
  RankOneHSField<double> field_{0.5, 1};
  Model model_{field_, AlphaGrid<double>::midpoint(4096)};
};

TEST_F(CenterTranslateTest, GeneratorMapsToIndicator) {
  const auto sf = s_map(model_, delta(0));
  for (Index i = 0; i < model_.grid().size(); ++i) {
    const double expected = model_.grid().nodes(i) > 0.5 ? 1.0 : 0.0;
    ASSERT_NEAR(std::abs(sf(i) - expected), 0.0, 1e-15);
  }
  EXPECT_NEAR(periodized_norm_sq(model_, delta(0)), 0.375, 1e-12);
}

TEST_F(CenterTranslateTest, ZeroSequence) {
  TranslateSum<double> zero;
  zero.offset = -2;
  zero.coefficients = ComplexVector<double>::Zero(5);
  EXPECT_EQ(s_map(model_, zero).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(isometry_residual(model_, zero), 0.0);
}

TEST_F(CenterTranslateTest, SelfPairingAndShiftCovariance) {
  EXPECT_NEAR(std::abs(lambda_k(model_, 0, delta(0)) - 0.375), 0.0, 1e-12);
  for (Index j : {-3, 1, 5}) {
    EXPECT_NEAR(std::abs(lambda_k(model_, j, delta(j)) - 0.375), 0.0, 1e-12);
  }
}

TEST_F(CenterTranslateTest, RandomSequencesAreIsometric) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_sequence(rng, 4);
    EXPECT_LT(isometry_residual(model_, a), 1e-8);
    EXPECT_LT((s_map(model_, a) - s_map_closed(model_, a)).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(CenterTranslateOracleTest, TranslateInnerMatchesMoments) {
  for (double eps : {0.2, 0.5}) {
    for (int d : {1, 3}) {
      const RankOneHSField<double> field(eps, d);
      const Model model(field, AlphaGrid<double>::gauss_legendre(eps, 64, 8));
      for (Index l : {-2, 0, 1, 3}) {
        for (Index k : {-1, 0, 2}) {
          const cd oracle =
              moment_oracle(eps, d, -2.0 * kPi * double(l - k));
          EXPECT_LT(std::abs(translate_inner(model, l, k) - oracle), 1e-12);
        }
      }
    }
  }
}

TEST(CenterTranslateOracleTest, LambdaMatchesPairingOnRandomSequences) {
  std::mt19937_64 rng(73);
  const RankOneHSField<double> field(0.3, 2);
  const Model model(field, AlphaGrid<double>::gauss_legendre(0.3, 64, 8));
  for (int t = 0; t < 10; ++t) {
    const auto a = random_sequence(rng, 3);
    for (Index k = -4; k <= 4; ++k) {
      // <f, T_k psi> = sum_l a_l integral of w e^{-2 pi i (l - k) alpha}.
      cd oracle = 0;
      for (Index j = 0; j < a.coefficients.size(); ++j) {
        oracle += a.coefficients(j) *
                  moment_oracle(0.3, 2, -2.0 * kPi * double(a.offset + j - k));
      }
      EXPECT_LT(std::abs(lambda_k(model, k, a) - oracle), 1e-11);
      EXPECT_LT(std::abs(translate_pairing(model, k, a) - oracle), 1e-11);
    }
  }
}

TEST(CenterTranslateFrameTest, BoundsLieInAdmissibleRange) {
  for (double eps : {0.1, 0.5, 0.9}) {
    for (int d : {1, 2, 3}) {
      const auto r = center_translate_frame(RankOneHSField<double>(eps, d), 128);
      EXPECT_EQ(r.report.verdict, Verdict::frame);
      EXPECT_TRUE(r.within);
      EXPECT_TRUE(r.report.consistent);
      EXPECT_GE(r.report.oracle_bounds.lower, std::pow(eps, d) - 1e-9);
      EXPECT_LE(r.report.oracle_bounds.upper, 1.0 + 1e-9);
    }
  }
}

TEST(HsRankOneTest, DilatedIndicatorHasUnitNorm) {
  EXPECT_NEAR(hs_rank_one_norm(dilated_window(0.5, 1, 4.0, 1024)), 1.0, 1e-12);
  EXPECT_NEAR(hs_rank_one_norm(dilated_window(0.8, 2, 2.0, 1000)), 1.0, 1e-2);
}

TEST(HsRankOneTest, Homogeneity) {
  auto u = dilated_window(0.5, 1, 2.0, 512);
  const cd c(1.5, -2.0);
  u.values *= c;
  EXPECT_NEAR(hs_rank_one_norm(u), std::norm(c), 1e-12);
}

TEST(HsRankOneTest, RandomWindowEqualsSquaredNorm) {
  std::mt19937_64 rng(79);
  WindowSamples<double> u;
  u.values = random_complex<double>(300, 1, rng);
  u.spacing = 0.01;
  // trace(K K^*) for K = u u^*: sum_ij |u_i|^2 |u_j|^2 h^2 = (||u||^2)^2.
  double norm_sq = 0.0;
  for (Index i = 0; i < 300; ++i) norm_sq += std::norm(u.values(i)) * u.spacing;
  EXPECT_NEAR(hs_rank_one_norm(u), norm_sq, 1e-12 * norm_sq);
}

TEST(HsRankOneTest, SupportBeyondGridThrows) {
  EXPECT_THROW(dilated_window(0.25, 1, 2.0, 100), ArgumentError);
  EXPECT_THROW(dilated_window(0.0, 1, 2.0, 100), ArgumentError);
}

}  // namespace
}  // namespace gframe
