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

// Tensor families G_{m,n}(x) = f_n(x) g_m built from a scalar family {f_n} on
// the grid and an orthonormal family {g_m} of the fiber U = C^M.
//
// Two ambient spaces appear: the unweighted L^2(Omega, U), where the DFT
// family is an orthonormal basis of unimodular functions, and the weighted
// L^2_w(Omega, U), where {f_n} has to be re-orthonormalized under w. The two
// are verified separately and never mixed.

#ifndef GFRAME_TENSOR_ONB_HPP_
#define GFRAME_TENSOR_ONB_HPP_

#include <utility>

#include "gframe/core.hpp"
#include "gframe/wspace.hpp"

namespace gframe {

template <typename Scalar = double>
struct TensorBasis {
  // N x K; column n holds f_n(x_i).
  ComplexMatrix<Scalar> scalar_family;
  // M x J; column m holds g_m.
  ComplexMatrix<Scalar> fiber_family;

  Index grid_size() const { return scalar_family.rows(); }
  Index fiber_dim() const { return fiber_family.rows(); }
  Index scalar_count() const { return scalar_family.cols(); }
  Index fiber_count() const { return fiber_family.cols(); }
  Index size() const { return scalar_count() * fiber_count(); }

  // Flat position of (m, n); n-major so that a fixed n is a contiguous block.
  Index flat_index(Index m, Index n) const { return n * fiber_count() + m; }

  // G_{m,n} as a Field: row i is f_n(x_i) g_m^T.
  Field<Scalar> element(Index m, Index n) const {
    return scalar_family.col(n) * fiber_family.col(m).transpose();
  }
};

// f_n(x_i) = exp(2 pi i n i / N), n = 0..N-1.
template <typename Scalar = double>
ComplexMatrix<Scalar> dft_family(Index grid_size) {
  if (grid_size < 1) throw ArgumentError("grid size must be >= 1");
  ComplexMatrix<Scalar> family(grid_size, grid_size);
  for (Index n = 0; n < grid_size; ++n) {
    for (Index i = 0; i < grid_size; ++i) {
      // Reduce n * i mod N first so the phase stays accurate for large N.
      const Index k = (n * i) % grid_size;
      family(i, n) = unit_phase(Scalar(k) / Scalar(grid_size));
    }
  }
  return family;
}

// DFT scalar family and the standard basis of C^M.
template <typename Scalar = double>
TensorBasis<Scalar> build_default(Index grid_size, Index fiber_dim) {
  if (fiber_dim < 1) throw ArgumentError("fiber dimension must be >= 1");
  return {dft_family<Scalar>(grid_size),
          ComplexMatrix<Scalar>::Identity(fiber_dim, fiber_dim)};
}

// Column flat_index(m, n) holds G_{m,n} flattened column-major.
template <typename Scalar>
ComplexMatrix<Scalar> flattened_elements(const TensorBasis<Scalar>& basis) {
  const Index n_rows = basis.grid_size() * basis.fiber_dim();
  ComplexMatrix<Scalar> out(n_rows, basis.size());
  for (Index n = 0; n < basis.scalar_count(); ++n) {
    for (Index m = 0; m < basis.fiber_count(); ++m) {
      const Field<Scalar> g = basis.element(m, n);
      out.col(basis.flat_index(m, n)) =
          Eigen::Map<const ComplexVector<Scalar>>(g.data(), g.size());
    }
  }
  return out;
}

// Gram matrix <G_b, G_a> (row a, column b) under the weighted inner product of
// `space`; with w = 1 this is the unweighted L^2(Omega, U) Gram.
template <typename Scalar>
ComplexMatrix<Scalar> tensor_gram(const WeightedSpace<Scalar>& space,
                                  const TensorBasis<Scalar>& basis) {
  if (basis.grid_size() != space.grid_size() ||
      basis.fiber_dim() != space.fiber_dim()) {
    throw ShapeError("basis does not match the space dimensions");
  }
  const ComplexMatrix<Scalar> v = flattened_elements(basis);
  // Each grid weight repeats once per fiber coordinate (column-major layout).
  RealVector<Scalar> diag = space.weights().replicate(space.fiber_dim(), 1) *
                            space.quadrature_weight();
  return v.adjoint() * diag.template cast<Complex<Scalar>>().asDiagonal() * v;
}

template <typename Scalar>
Scalar gram_residual(const ComplexMatrix<Scalar>& gram) {
  if (gram.size() == 0) return Scalar(0);
  return (gram - ComplexMatrix<Scalar>::Identity(gram.rows(), gram.cols()))
      .cwiseAbs()
      .maxCoeff();
}

// max |<G_{m,n}, G_{m',n'}> - delta delta| in the unweighted space.
template <typename Scalar>
Scalar verify_tensor_onb(const WeightedSpace<Scalar>& space,
                         const TensorBasis<Scalar>& basis) {
  if (!space.unweighted(Scalar(kSupportThreshold))) {
    throw PreconditionError("verify_tensor_onb needs the unweighted space");
  }
  return gram_residual(tensor_gram(space, basis));
}

// Same residual under the weighted inner product; requires w > 0 everywhere.
template <typename Scalar>
Scalar verify_weighted_onb(const WeightedSpace<Scalar>& space,
                           const TensorBasis<Scalar>& basis) {
  if (!space.strictly_positive()) {
    throw PreconditionError("verify_weighted_onb needs w_i > 0 at every point");
  }
  return gram_residual(tensor_gram(space, basis));
}

// Modified Gram-Schmidt of the columns of `family` under the L^2_w(Omega)
// inner product.
template <typename Scalar>
ComplexMatrix<Scalar> weighted_orthonormalize(
    const WeightedSpace<Scalar>& space, ComplexMatrix<Scalar> family) {
  if (!space.strictly_positive()) {
    throw PreconditionError("weighted orthonormalization needs w_i > 0");
  }
  if (family.rows() != space.grid_size()) {
    throw ShapeError("family length does not match the grid");
  }
  for (Index n = 0; n < family.cols(); ++n) {
    for (Index k = 0; k < n; ++k) {
      const Complex<Scalar> c =
          scalar_inner(space, family.col(n), family.col(k));
      family.col(n) -= c * family.col(k);
    }
    const Scalar len = std::sqrt(scalar_norm_sq(space, family.col(n)));
    if (!(len > Scalar(0))) {
      throw PreconditionError("scalar family is linearly dependent");
    }
    family.col(n) /= len;
  }
  return family;
}

// DFT family re-orthonormalized under w, paired with the standard fiber basis.
template <typename Scalar>
TensorBasis<Scalar> build_weighted(const WeightedSpace<Scalar>& space) {
  return {weighted_orthonormalize(space, dft_family<Scalar>(space.grid_size())),
          ComplexMatrix<Scalar>::Identity(space.fiber_dim(),
                                          space.fiber_dim())};
}

// c(m, n) = <f, G_{m,n}> under the inner product of `space`.
template <typename Scalar>
ComplexMatrix<Scalar> coefficients(const WeightedSpace<Scalar>& space,
                                   const TensorBasis<Scalar>& basis,
                                   const Field<Scalar>& f) {
  check_conforms(space, f);
  ComplexMatrix<Scalar> c(basis.fiber_count(), basis.scalar_count());
  for (Index n = 0; n < basis.scalar_count(); ++n) {
    for (Index m = 0; m < basis.fiber_count(); ++m) {
      c(m, n) = inner(space, f, basis.element(m, n));
    }
  }
  return c;
}

// sum_{m,n} c(m, n) G_{m,n}
template <typename Scalar>
Field<Scalar> synthesize(const TensorBasis<Scalar>& basis,
                         const ComplexMatrix<Scalar>& c) {
  if (c.rows() != basis.fiber_count() || c.cols() != basis.scalar_count()) {
    throw ShapeError("coefficient array does not match the basis");
  }
  // sum_n f_n (sum_m c(m,n) g_m)^T
  return basis.scalar_family * (basis.fiber_family * c).transpose();
}

// max_{n,i} ||f_n(x_i)| - 1|
template <typename Scalar>
Scalar unimodularity_residual(const ComplexMatrix<Scalar>& family) {
  if (family.size() == 0) return Scalar(0);
  return (family.cwiseAbs().array() - Scalar(1)).abs().maxCoeff();
}

}  // namespace gframe

#endif  // GFRAME_TENSOR_ONB_HPP_
