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

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "gframe/gframe_ops.hpp"
#include "gframe/tensor_onb.hpp"
#include "gframe/wspace.hpp"

namespace gframe {
namespace {

using Space = WeightedSpace<double>;
using Family = OperatorFamily<double>;
using cd = std::complex<double>;

RealVector<double> weights(std::initializer_list<double> w) {
  RealVector<double> out(static_cast<Index>(w.size()));
  Index i = 0;
  for (double v : w) out(i++) = v;
  return out;
}

// Plain-loop weighted inner product, written independently of the library.
cd loop_inner(const RealVector<double>& w, const ComplexMatrix<double>& f,
              const ComplexMatrix<double>& g) {
  cd total = 0;
  for (Index i = 0; i < f.rows(); ++i) {
    for (Index j = 0; j < f.cols(); ++j) {
      total += f(i, j) * std::conj(g(i, j)) * w(i);
    }
  }
  return total / double(f.rows());
}

// Eigenvalues of the frame operator sum_{m,n} L*_{m,n} L_{m,n} as a map on
// fields, expressed in the H-orthonormal coordinate basis and solved with a
// general (non-Hermitian) eigensolver.
std::vector<double> brute_force_frame_spectrum(const Family& fam) {
  const auto& space = fam.space();
  const Index n = space.grid_size(), m = space.fiber_dim();
  const Index dim = n * m;
  std::vector<ComplexMatrix<double>> coords;
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < n; ++i) {
      ComplexMatrix<double> e = ComplexMatrix<double>::Zero(n, m);
      e(i, j) = 1.0 / std::sqrt(space.weight(i) / double(n));
      coords.push_back(e);
    }
  }
  Eigen::MatrixXcd op(dim, dim);
  for (Index b = 0; b < dim; ++b) {
    ComplexMatrix<double> image = ComplexMatrix<double>::Zero(n, m);
    for (Index nn = 0; nn < fam.basis().scalar_count(); ++nn) {
      for (Index mm = 0; mm < fam.basis().fiber_count(); ++mm) {
        image += lambda_adjoint(fam, mm, nn,
                                lambda(fam, mm, nn, coords[std::size_t(b)]));
      }
    }
    for (Index a = 0; a < dim; ++a) {
      op(a, b) = loop_inner(space.weights(), image, coords[std::size_t(a)]);
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(op);
  std::vector<double> out;
  for (Index k = 0; k < dim; ++k) out.push_back(solver.eigenvalues()(k).real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> replicated_sorted(const RealVector<double>& w, Index m) {
  std::vector<double> out;
  for (Index r = 0; r < m; ++r) {
    for (Index i = 0; i < w.size(); ++i) out.push_back(w(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- wspace

TEST(WeightedSpaceTest, InnerOfUnitConstantFieldIsOne) {
  const auto space = Space::constant(8, 3, 1.0);
  Field<double> f = zero_field(space);
  f.col(1).setConstant(1.0);
  EXPECT_NEAR(std::abs(inner(space, f, f) - cd(1.0)), 0.0, 1e-15);
}

TEST(WeightedSpaceTest, PointwiseOrthogonalFieldsAreOrthogonal) {
  const Space space(weights({0.3, 2.0, 1.0}), 2);
  Field<double> f = zero_field(space), g = zero_field(space);
  f.col(0).setConstant(cd(1.0, 2.0));
  g.col(1).setConstant(cd(-3.0, 0.5));
  EXPECT_EQ(inner(space, f, g), cd(0.0));
}

TEST(WeightedSpaceTest, TwoPointHandSum) {
  const Space space(weights({0.5, 2.0}), 1);
  const Field<double> f = ComplexMatrix<double>::Ones(2, 1);
  EXPECT_NEAR(std::abs(inner(space, f, f) - cd(1.25)), 0.0, 1e-15);
}

TEST(WeightedSpaceTest, NormExamples) {
  const auto space = Space::constant(4, 1, 1.0);
  EXPECT_EQ(norm(space, zero_field(space)), 0.0);
  Field<double> f(4, 1);
  f << 1.0, 2.0, 3.0, 4.0;
  EXPECT_NEAR(norm(space, f), std::sqrt(30.0 / 4.0), 1e-15);
  const auto unit = Space::constant(5, 2, 1.0);
  Field<double> e = zero_field(unit);
  e.col(0).setOnes();
  EXPECT_NEAR(norm(unit, e), 1.0, 1e-15);
}

TEST(WeightedSpaceTest, NormVanishesOnlyOffTheSupport) {
  const Space space(weights({0.0, 1.0, 0.0}), 1);
  Field<double> f = zero_field(space);
  f(0, 0) = 5.0;
  f(2, 0) = cd(0, 7.0);
  EXPECT_EQ(norm(space, f), 0.0);
  f(1, 0) = 1e-3;
  EXPECT_GT(norm(space, f), 0.0);
}

TEST(WeightedSpaceTest, TotalMassExamples) {
  EXPECT_DOUBLE_EQ(total_mass(Space::constant(7, 2, 1.0)), 1.0);
  EXPECT_DOUBLE_EQ(total_mass(Space(weights({0.5, 1.5}), 1)), 1.0);
}

TEST(WeightedSpaceTest, RejectsInvalidWeights) {
  EXPECT_THROW(Space(weights({0.0, 0.0}), 1), ArgumentError);
  EXPECT_THROW(Space(weights({1.0, -0.5}), 1), ArgumentError);
  EXPECT_THROW(Space(weights({1.0}), 0), ArgumentError);
  EXPECT_THROW(Space(RealVector<double>(0), 1), ArgumentError);
}

TEST(WeightedSpaceTest, ShapeMismatchThrows) {
  const auto space = Space::constant(4, 2, 1.0);
  const Field<double> wrong = ComplexMatrix<double>::Zero(4, 3);
  EXPECT_THROW(inner(space, wrong, wrong), ShapeError);
  EXPECT_THROW(norm(space, ComplexMatrix<double>::Zero(3, 2)), ShapeError);
}

TEST(WeightedSpaceTest, InnerMatchesLoopOracle) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  RealVector<double> w(9);
  for (Index i = 0; i < 9; ++i) w(i) = u(rng);
  const Space space(w, 3);
  const auto f = random_field(space, rng), g = random_field(space, rng);
  EXPECT_NEAR(std::abs(inner(space, f, g) - loop_inner(w, f, g)), 0.0, 1e-13);
}

class WeightedSpaceProperty : public ::testing::TestWithParam<int> {};

TEST_P(WeightedSpaceProperty, HilbertSpaceIdentities) {
  std::mt19937_64 rng(GetParam());
  std::uniform_real_distribution<double> u(0.0, 5.0);
  std::uniform_int_distribution<int> size(1, 12);
  const Index n = size(rng), m = size(rng) % 4 + 1;
  RealVector<double> w(n);
  for (Index i = 0; i < n; ++i) w(i) = u(rng);
  w(0) += 0.1;
  const Space space(w, m);
  const auto f = random_field(space, rng), g = random_field(space, rng);
  const cd c(u(rng) - 2.5, u(rng) - 2.5);

  const cd fg = inner(space, f, g);
  // Conjugate symmetry and linearity in the first argument.
  EXPECT_NEAR(std::abs(fg - std::conj(inner(space, g, f))), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(inner(space, Field<double>(c * f), g) - c * fg), 0.0,
              1e-12 * (1.0 + std::abs(c * fg)));
  // Cauchy-Schwarz.
  EXPECT_LE(std::abs(fg), norm(space, f) * norm(space, g) * (1.0 + 1e-12));
  // Parallelogram law.
  const double lhs = norm_sq(space, Field<double>(f + g)) +
                     norm_sq(space, Field<double>(f - g));
  const double rhs = 2.0 * (norm_sq(space, f) + norm_sq(space, g));
  EXPECT_NEAR(lhs, rhs, 1e-12 * rhs);
  // Absolute homogeneity.
  EXPECT_NEAR(norm(space, Field<double>(c * f)), std::abs(c) * norm(space, f),
              1e-12 * std::abs(c) * norm(space, f));
}

INSTANTIATE_TEST_SUITE_P(Seeds, WeightedSpaceProperty,
                         ::testing::Range(0, 25));

// ------------------------------------------------------------- tensor-onb

TEST(TensorBasisTest, TrivialBasis) {
  const auto basis = build_default<double>(1, 1);
  EXPECT_EQ(basis.scalar_family(0, 0), cd(1.0));
  EXPECT_EQ(basis.fiber_family(0, 0), cd(1.0));
  EXPECT_EQ(verify_tensor_onb(Space::constant(1, 1, 1.0), basis), 0.0);
}

TEST(TensorBasisTest, FourPointDftColumn) {
  const auto f = dft_family<double>(4);
  const cd expected[] = {1.0, cd(0, 1), -1.0, cd(0, -1)};
  for (Index i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(f(i, 1) - expected[i]), 0.0, 1e-15);
  }
}

TEST(TensorBasisTest, DftGramIsIdentity) {
  for (Index n : {1, 2, 3, 8, 17, 64}) {
    const auto f = dft_family<double>(n);
    // (1/N) sum_i f_n(x_i) conj(f_n'(x_i))
    const ComplexMatrix<double> gram = f.adjoint() * f / double(n);
    EXPECT_LT(gram_residual(gram), 1e-12) << "N=" << n;
    EXPECT_LT(unimodularity_residual(f), 1e-15);
  }
}

TEST(TensorBasisTest, DefaultTensorBasisIsOrthonormal) {
  const auto basis = build_default<double>(4, 2);
  EXPECT_EQ(basis.size(), 8);
  EXPECT_LT(verify_tensor_onb(Space::constant(4, 2, 1.0), basis), 1e-12);
}

TEST(TensorBasisTest, NonOrthogonalFiberPairResidualIsOverlap) {
  auto basis = build_default<double>(4, 2);
  const double t = 0.3;
  basis.fiber_family.col(1) << cd(std::sin(t)), cd(std::cos(t));
  // <g_0, g_1> = sin t, both unit vectors.
  const double overlap = std::abs(
      (basis.fiber_family.col(1).adjoint() * basis.fiber_family.col(0))(0));
  EXPECT_NEAR(verify_tensor_onb(Space::constant(4, 2, 1.0), basis), overlap,
              1e-15);
  EXPECT_NEAR(overlap, std::sin(t), 1e-15);
}

TEST(TensorBasisTest, OrthonormalityTransfersBothWays) {
  std::mt19937_64 rng(5);
  const auto space = Space::constant(6, 3, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    auto basis = build_default<double>(6, 3);
    // A random unitary keeps the tensor family orthonormal.
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_complex<double>(3, 3, rng));
    basis.fiber_family = qr.householderQ() * Eigen::MatrixXcd::Identity(3, 3);
    EXPECT_LT(verify_tensor_onb(space, basis), 1e-12);
    // Perturbing {g_m} breaks it by at least the fiber Gram defect.
    basis.fiber_family.col(2) += 0.05 * basis.fiber_family.col(0);
    const ComplexMatrix<double> fiber_gram =
        basis.fiber_family.adjoint() * basis.fiber_family;
    EXPECT_NEAR(verify_tensor_onb(space, basis), gram_residual(fiber_gram),
                1e-12);
    EXPECT_GT(verify_tensor_onb(space, basis), 1e-3);
  }
}

TEST(TensorBasisTest, UnweightedVerifierRejectsWeights) {
  EXPECT_THROW(verify_tensor_onb(Space(weights({1.0, 2.0}), 1),
                                 build_default<double>(2, 1)),
               PreconditionError);
}

TEST(TensorBasisTest, WeightedVerifierReducesToUnweighted) {
  const auto space = Space::constant(5, 2, 1.0);
  EXPECT_LT(verify_weighted_onb(space, build_default<double>(5, 2)), 1e-12);
}

TEST(TensorBasisTest, TwoPointWeightedGramSchmidtByHand) {
  const Space space(weights({0.5, 1.5}), 1);
  const auto basis = build_weighted(space);
  // f_0 = 1 / sqrt(mass) = 1; f_1 = (1,-1) - <(1,-1), 1>_w 1 = (1.5, -0.5),
  // norm^2 = (0.5 * 2.25 + 1.5 * 0.25) / 2 = 0.75.
  const double s = std::sqrt(0.75);
  EXPECT_NEAR(std::abs(basis.scalar_family(0, 0) - cd(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(basis.scalar_family(1, 0) - cd(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(basis.scalar_family(0, 1) - cd(1.5 / s)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(basis.scalar_family(1, 1) - cd(-0.5 / s)), 0.0, 1e-14);
  EXPECT_LT(verify_weighted_onb(space, basis), 1e-12);
}

TEST(TensorBasisTest, WeightedVerifierNeedsPositiveWeights) {
  const Space space(weights({0.0, 1.0}), 1);
  EXPECT_THROW(verify_weighted_onb(space, build_default<double>(2, 1)),
               PreconditionError);
  EXPECT_THROW(build_weighted(space), PreconditionError);
}

TEST(TensorBasisTest, WeightedExpansionReconstructs) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  RealVector<double> w(12);
  for (Index i = 0; i < 12; ++i) w(i) = u(rng);
  const Space space(w, 3);
  const auto basis = build_weighted(space);
  const auto f = random_field(space, rng);
  const Field<double> g = synthesize(basis, coefficients(space, basis, f));
  EXPECT_LT((g - f).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(TensorBasisTest, UnweightedCompleteness) {
  std::mt19937_64 rng(10);
  for (auto [n, m] : {std::pair<Index, Index>{16, 16}, {32, 8}, {7, 3}}) {
    const auto space = Space::constant(n, m, 1.0);
    const auto basis = build_default<double>(n, m);
    const auto f = random_field(space, rng);
    const Field<double> g = synthesize(basis, coefficients(space, basis, f));
    EXPECT_LT((g - f).cwiseAbs().maxCoeff(), 1e-10);
  }
}

// ------------------------------------------------------------- gframe-ops

TEST(OperatorFamilyTest, LambdaTildeOfBasisElementIsOne) {
  const auto fam = Family::with_default_basis(Space::constant(6, 2, 1.0));
  const auto phi = lambda_tilde(fam, 1, 4, fam.basis().element(1, 4));
  EXPECT_LT((phi.array() - cd(1.0)).abs().maxCoeff(), 1e-14);
  EXPECT_NEAR(std::abs(lambda(fam, 1, 4, fam.basis().element(1, 4)) - 1.0),
              0.0, 1e-14);
  EXPECT_LT(std::abs(lambda(fam, 0, 4, fam.basis().element(1, 4))), 1e-14);
  EXPECT_LT(std::abs(lambda(fam, 1, 3, fam.basis().element(1, 4))), 1e-14);
}

TEST(OperatorFamilyTest, LambdaTildeOfOrthogonalFieldVanishes) {
  const auto fam = Family::with_default_basis(Space::constant(5, 2, 1.0));
  Field<double> f = zero_field(fam.space());
  f.col(1).setConstant(cd(2.0, -1.0));
  EXPECT_EQ(lambda_tilde(fam, 0, 3, f).cwiseAbs().maxCoeff(), 0.0);
}

TEST(OperatorFamilyTest, TwoPointLambdaByHand) {
  const auto fam = Family::with_default_basis(Space(weights({0.5, 1.5}), 1));
  const Field<double> f = ComplexMatrix<double>::Ones(2, 1);
  EXPECT_NEAR(std::abs(lambda(fam, 0, 0, f) - 1.0), 0.0, 1e-15);
}

TEST(OperatorFamilyTest, IndexOutOfRangeThrows) {
  const auto fam = Family::with_default_basis(Space::constant(3, 2, 1.0));
  const auto f = zero_field(fam.space());
  EXPECT_THROW(lambda(fam, 2, 0, f), IndexError);
  EXPECT_THROW(lambda_tilde(fam, 0, 3, f), IndexError);
  EXPECT_THROW(lambda_adjoint(fam, -1, 0, cd(1.0)), IndexError);
}

TEST(OperatorFamilyTest, AdjointExamples) {
  const auto fam = Family::with_default_basis(Space::constant(4, 2, 1.0));
  const GridFunction<double> zero = GridFunction<double>::Zero(4);
  EXPECT_EQ(lambda_tilde_adjoint(fam, 1, 2, zero).cwiseAbs().maxCoeff(), 0.0);
  const GridFunction<double> one = GridFunction<double>::Ones(4);
  EXPECT_LT((lambda_tilde_adjoint(fam, 1, 2, one) - fam.basis().element(1, 2))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
  EXPECT_EQ(lambda_adjoint(fam, 0, 1, cd(0.0)).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_NEAR(norm(fam.space(), lambda_adjoint(fam, 0, 1, cd(1.0))), 1.0,
              1e-14);
  EXPECT_THROW(lambda_tilde_adjoint(fam, 0, 0, GridFunction<double>(GridFunction<double>::Zero(3))),
               ShapeError);
}

TEST(OperatorFamilyTest, AnalysisMatchesPerOperatorLambda) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  RealVector<double> w(6);
  for (Index i = 0; i < 6; ++i) w(i) = u(rng);
  const auto fam = Family::with_default_basis(Space(w, 3));
  const auto f = random_field(fam.space(), rng);
  const auto all = analysis(fam, f);
  for (Index n = 0; n < 6; ++n) {
    for (Index m = 0; m < 3; ++m) {
      EXPECT_LT(std::abs(all(fam.basis().flat_index(m, n)) -
                         lambda(fam, m, n, f)),
                1e-12);
    }
  }
}

TEST(OperatorFamilyTest, TwoPointAnalysisSingularValues) {
  const double a = 0.3, b = 2.7;
  const auto fam = Family::with_default_basis(Space(weights({a, b}), 1));
  const auto t = analysis_matrix(fam);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
  std::vector<double> s2 = {std::norm(svd.singularValues()(0)),
                            std::norm(svd.singularValues()(1))};
  std::sort(s2.begin(), s2.end());
  EXPECT_NEAR(s2[0], a, 1e-14);
  EXPECT_NEAR(s2[1], b, 1e-14);
}

TEST(OperatorFamilyTest, UnweightedAnalysisMatrixIsUnitary) {
  const auto fam = Family::with_default_basis(Space::constant(8, 2, 1.0));
  const auto t = analysis_matrix(fam);
  EXPECT_LT(gram_residual(ComplexMatrix<double>(t.adjoint() * t)), 1e-13);
  EXPECT_LT(gram_residual(ComplexMatrix<double>(t * t.adjoint())), 1e-13);
}

TEST(OperatorFamilyTest, AnalysisMatrixNeedsPositiveWeights) {
  const auto fam = Family::with_default_basis(Space(weights({0.0, 1.0}), 1));
  EXPECT_THROW(analysis_matrix(fam), PreconditionError);
  EXPECT_NO_THROW(analysis_matrix(fam, std::vector<Index>{1}));
}

TEST(OperatorFamilyTest, EightByEightSpectrumByBruteForce) {
  const auto w = weights({0.5, 1.0, 1.0, 2.0});
  const auto fam = Family::with_default_basis(Space(w, 2));
  const auto oracle = brute_force_frame_spectrum(fam);
  const auto expected = replicated_sorted(w, 2);
  const RealVector<double> spectrum =
      hermitian_spectrum(frame_operator(analysis_matrix(fam)));
  ASSERT_EQ(oracle.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(oracle[k], expected[k], 1e-12);
    EXPECT_NEAR(spectrum(Index(k)), expected[k], 1e-12);
  }
}

class OperatorFamilyProperty : public ::testing::TestWithParam<int> {};

TEST_P(OperatorFamilyProperty, FrameIdentitiesOnRandomInputs) {
  std::mt19937_64 rng(100 + GetParam());
  std::uniform_real_distribution<double> u(0.1, 10.0);
  const Index sizes[] = {2, 3, 4, 8};
  const Index n = sizes[GetParam() % 4], m = GetParam() % 3 + 1;
  RealVector<double> w(n);
  for (Index i = 0; i < n; ++i) w(i) = u(rng);
  const Space space(w, m);
  const auto fam = Family::with_default_basis(space);
  const double mass = total_mass(space);

  for (int trial = 0; trial < 4; ++trial) {
    const auto f = random_field(space, rng);
    const double f_sq = norm_sq(space, f);
    for (Index nn = 0; nn < n; ++nn) {
      // Parseval g-frame identity for fixed n.
      EXPECT_NEAR(fiber_energy(fam, nn, f), f_sq, 1e-10 * f_sq);
      // Bessel bound with C = total mass.
      double bessel = 0.0;
      for (Index mm = 0; mm < m; ++mm) {
        bessel += std::norm(lambda(fam, mm, nn, f));
        // Boundedness of each Lt.
        EXPECT_LE(scalar_norm_sq(space, lambda_tilde(fam, mm, nn, f)),
                  f_sq * (1.0 + 1e-12));
      }
      EXPECT_LE(bessel, mass * f_sq * (1.0 + 1e-10));
    }
    const GridFunction<double> phi = random_complex<double>(n, 1, rng);
    const cd c(u(rng), -u(rng));
    for (Index nn = 0; nn < n; ++nn) {
      for (Index mm = 0; mm < m; ++mm) {
        // Integral form against the inner-product form.
        const cd l = lambda(fam, mm, nn, f);
        EXPECT_LT(std::abs(l - lambda_via_adjoint(fam, mm, nn, f)),
                  1e-12 * (1.0 + std::abs(l)));
        // <Lt f, phi>_{L^2_w} = <f, Lt* phi>_H
        const cd lhs =
            scalar_inner(space, lambda_tilde(fam, mm, nn, f), phi);
        const cd rhs =
            inner(space, f, lambda_tilde_adjoint(fam, mm, nn, phi));
        EXPECT_LT(std::abs(lhs - rhs), 1e-12 * (1.0 + std::abs(lhs)));
        // <L f, c>_C = <f, L* c>_H
        const cd lhs_c = l * std::conj(c);
        const cd rhs_c = inner(space, f, lambda_adjoint(fam, mm, nn, c));
        EXPECT_LT(std::abs(lhs_c - rhs_c), 1e-12 * (1.0 + std::abs(lhs_c)));
      }
    }
  }
}

TEST_P(OperatorFamilyProperty, SpectrumLawAgainstBruteForce) {
  std::mt19937_64 rng(200 + GetParam());
  std::uniform_real_distribution<double> u(0.1, 10.0);
  const Index n = GetParam() % 5 + 1, m = GetParam() % 2 + 1;
  RealVector<double> w(n);
  for (Index i = 0; i < n; ++i) w(i) = u(rng);
  const auto fam = Family::with_default_basis(Space(w, m));
  const auto oracle = brute_force_frame_spectrum(fam);
  const auto expected = replicated_sorted(w, m);
  const RealVector<double> gram = hermitian_spectrum(synthesis_gram(fam));
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_NEAR(oracle[k], expected[k], 1e-9);
    EXPECT_NEAR(gram(Index(k)), expected[k], 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OperatorFamilyProperty,
                         ::testing::Range(0, 12));

}  // namespace
}  // namespace gframe
