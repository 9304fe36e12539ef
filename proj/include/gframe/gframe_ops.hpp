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

// The operator families built on a weighted space and a tensor basis:
//
//   field-valued   Lt_{m,n}(f)(x) = <Sf(x), G_{m,n}(x)>_U
//   scalar-valued  L_{m,n}(f)     = integral of Lt_{m,n}(f) w over Omega
//
// together with their adjoints and the matrices of the analysis operator,
// frame operator and synthesis Gram in w-orthonormal coordinates of H.

#ifndef GFRAME_GFRAME_OPS_HPP_
#define GFRAME_GFRAME_OPS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "gframe/core.hpp"
#include "gframe/tensor_onb.hpp"
#include "gframe/wspace.hpp"

namespace gframe {

template <typename Scalar = double>
class OperatorFamily {
 public:
  OperatorFamily(WeightedSpace<Scalar> space, TensorBasis<Scalar> basis)
      : space_(std::move(space)), basis_(std::move(basis)) {
    if (basis_.grid_size() != space_.grid_size()) {
      throw ShapeError("scalar family length " +
                       std::to_string(basis_.grid_size()) +
                       " does not match grid size " +
                       std::to_string(space_.grid_size()));
    }
    if (basis_.fiber_dim() != space_.fiber_dim()) {
      throw ShapeError("fiber family dimension does not match the space");
    }
  }

  // Family on the default DFT / standard basis.
  static OperatorFamily with_default_basis(WeightedSpace<Scalar> space) {
    auto basis =
        build_default<Scalar>(space.grid_size(), space.fiber_dim());
    return OperatorFamily(std::move(space), std::move(basis));
  }

  const WeightedSpace<Scalar>& space() const { return space_; }
  const TensorBasis<Scalar>& basis() const { return basis_; }

  // Number of operators, |J| * |K|.
  Index size() const { return basis_.size(); }

  void check_index(Index m, Index n) const {
    if (m < 0 || m >= basis_.fiber_count() || n < 0 ||
        n >= basis_.scalar_count()) {
      throw IndexError("operator index (" + std::to_string(m) + ", " +
                       std::to_string(n) + ") out of range");
    }
  }

 private:
  WeightedSpace<Scalar> space_;
  TensorBasis<Scalar> basis_;
};

// x_i -> conj(f_n(x_i)) <Sf(x_i), g_m>_U
template <typename Scalar>
GridFunction<Scalar> lambda_tilde(const OperatorFamily<Scalar>& fam, Index m,
                                  Index n, const Field<Scalar>& f) {
  fam.check_index(m, n);
  check_conforms(fam.space(), f);
  const auto& basis = fam.basis();
  return (f * basis.fiber_family.col(m).conjugate())
      .cwiseProduct(basis.scalar_family.col(n).conjugate());
}

// (1/N) sum_i Lt_{m,n}(f)(x_i) w_i
template <typename Scalar>
Complex<Scalar> lambda(const OperatorFamily<Scalar>& fam, Index m, Index n,
                       const Field<Scalar>& f) {
  const GridFunction<Scalar> values = lambda_tilde(fam, m, n, f);
  const auto& space = fam.space();
  return values.cwiseProduct(space.weights().template cast<Complex<Scalar>>())
             .sum() *
         space.quadrature_weight();
}

// <f, S^{-1}(f_n g_m)>_H, the second formula for L_{m,n}(f).
template <typename Scalar>
Complex<Scalar> lambda_via_adjoint(const OperatorFamily<Scalar>& fam, Index m,
                                   Index n, const Field<Scalar>& f) {
  fam.check_index(m, n);
  return inner(fam.space(), f, fam.basis().element(m, n));
}

// x_i -> f_n(x_i) phi(x_i) g_m
template <typename Scalar>
Field<Scalar> lambda_tilde_adjoint(const OperatorFamily<Scalar>& fam, Index m,
                                   Index n, const GridFunction<Scalar>& phi) {
  fam.check_index(m, n);
  check_grid_function(fam.space(), phi);
  const auto& basis = fam.basis();
  return basis.scalar_family.col(n).cwiseProduct(phi) *
         basis.fiber_family.col(m).transpose();
}

template <typename Scalar>
Field<Scalar> lambda_adjoint(const OperatorFamily<Scalar>& fam, Index m,
                             Index n, Complex<Scalar> c) {
  fam.check_index(m, n);
  return c * fam.basis().element(m, n);
}

// All coefficients L_{m,n}(f), in the basis' flat order.
template <typename Scalar>
ComplexVector<Scalar> analysis(const OperatorFamily<Scalar>& fam,
                               const Field<Scalar>& f) {
  check_conforms(fam.space(), f);
  const auto& space = fam.space();
  const auto& basis = fam.basis();
  // Sf w, projected on each g_m: (N x J), then integrated against conj(f_n).
  const ComplexMatrix<Scalar> weighted =
      space.weights().template cast<Complex<Scalar>>().asDiagonal() * f;
  const ComplexMatrix<Scalar> fiber_coeffs =
      weighted * basis.fiber_family.conjugate();
  const ComplexMatrix<Scalar> c = basis.scalar_family.adjoint() * fiber_coeffs *
                                  Complex<Scalar>(space.quadrature_weight());
  // c(n, m) -> flat n * J + m
  ComplexVector<Scalar> out(fam.size());
  for (Index n = 0; n < basis.scalar_count(); ++n) {
    for (Index m = 0; m < basis.fiber_count(); ++m) {
      out(basis.flat_index(m, n)) = c(n, m);
    }
  }
  return out;
}

// sum_{m,n} |L_{m,n}(f)|^2
template <typename Scalar>
Scalar frame_energy(const OperatorFamily<Scalar>& fam, const Field<Scalar>& f) {
  return analysis(fam, f).squaredNorm();
}

// sum_m ||Lt_{m,n}(f)||^2 in L^2_w(Omega), for one fixed n.
template <typename Scalar>
Scalar fiber_energy(const OperatorFamily<Scalar>& fam, Index n,
                    const Field<Scalar>& f) {
  Scalar total(0);
  for (Index m = 0; m < fam.basis().fiber_count(); ++m) {
    total += scalar_norm_sq(fam.space(), lambda_tilde(fam, m, n, f));
  }
  return total;
}

// Field with e_j at grid point i, scaled to unit H-norm.
template <typename Scalar>
Field<Scalar> coordinate_field(const WeightedSpace<Scalar>& space, Index i,
                               Index j) {
  Field<Scalar> e = zero_field(space);
  e(i, j) = Complex<Scalar>(
      Scalar(1) / std::sqrt(space.weight(i) * space.quadrature_weight()));
  return e;
}

// Matrix of f -> (L_{m,n} f) on the orthonormal coordinate fields of the
// points in `support` (column index = fiber j * |support| + position of i).
// Rows follow the basis' flat order.
template <typename Scalar>
ComplexMatrix<Scalar> analysis_matrix(const OperatorFamily<Scalar>& fam,
                                      const std::vector<Index>& support) {
  const auto& space = fam.space();
  const Index count = static_cast<Index>(support.size());
  ComplexMatrix<Scalar> t(fam.size(), count * space.fiber_dim());
  for (Index j = 0; j < space.fiber_dim(); ++j) {
    for (Index p = 0; p < count; ++p) {
      const Index i = support[static_cast<std::size_t>(p)];
      if (i < 0 || i >= space.grid_size()) {
        throw IndexError("support index out of range");
      }
      if (!(space.weight(i) > Scalar(0))) {
        throw PreconditionError(
            "analysis coordinates need w_i > 0; restrict to E_w first");
      }
      t.col(j * count + p) = analysis(fam, coordinate_field(space, i, j));
    }
  }
  return t;
}

// Analysis matrix over the whole grid. Every w_i must be positive.
template <typename Scalar>
ComplexMatrix<Scalar> analysis_matrix(const OperatorFamily<Scalar>& fam) {
  const auto& space = fam.space();
  if (!space.strictly_positive()) {
    throw PreconditionError(
        "analysis coordinates need w_i > 0; restrict to E_w first");
  }
  std::vector<Index> all(static_cast<std::size_t>(space.grid_size()));
  for (Index i = 0; i < space.grid_size(); ++i) {
    all[static_cast<std::size_t>(i)] = i;
  }
  return analysis_matrix(fam, all);
}

// T^* T for the analysis matrix T: the frame operator in Euclidean
// coordinates.
template <typename Scalar>
ComplexMatrix<Scalar> frame_operator(const ComplexMatrix<Scalar>& analysis) {
  return analysis.adjoint() * analysis;
}

// Gram of the synthesis images: entry (a, b) = <L*_b 1, L*_a 1>_H.
template <typename Scalar>
ComplexMatrix<Scalar> synthesis_gram(const OperatorFamily<Scalar>& fam) {
  return tensor_gram(fam.space(), fam.basis());
}

}  // namespace gframe

#endif  // GFRAME_GFRAME_OPS_HPP_
