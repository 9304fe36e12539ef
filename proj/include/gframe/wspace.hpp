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

// Discrete weighted space L^2_w(Omega; U) with Omega = [0, 1) sampled on the
// uniform grid x_i = i / N, quadrature weight 1 / N per point and U = C^M.
//
// A vector f of the abstract Hilbert space H is stored through its image Sf:
// a Field is an N x M complex matrix whose row i is Sf(x_i). S is therefore
// the identity on representations and every norm below is the weighted one.

#ifndef GFRAME_WSPACE_HPP_
#define GFRAME_WSPACE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "gframe/core.hpp"

namespace gframe {

template <typename Scalar>
using Field = ComplexMatrix<Scalar>;

template <typename Scalar = double>
class WeightedSpace {
 public:
  using RealScalar = Scalar;

  WeightedSpace(RealVector<Scalar> weights, Index fiber_dim)
      : weights_(std::move(weights)), fiber_dim_(fiber_dim) {
    if (weights_.size() < 1) throw ArgumentError("grid size must be >= 1");
    if (fiber_dim_ < 1) throw ArgumentError("fiber dimension must be >= 1");
    if (!weights_.allFinite()) throw ArgumentError("weights must be finite");
    if ((weights_.array() < Scalar(0)).any()) {
      throw ArgumentError("weights must be nonnegative");
    }
    if (!(weights_.array() > Scalar(0)).any()) {
      throw ArgumentError("at least one weight must be positive");
    }
  }

  static WeightedSpace constant(Index grid_size, Index fiber_dim,
                                Scalar value = Scalar(1)) {
    if (grid_size < 1) throw ArgumentError("grid size must be >= 1");
    return WeightedSpace(RealVector<Scalar>::Constant(grid_size, value),
                         fiber_dim);
  }

  Index grid_size() const { return weights_.size(); }
  Index fiber_dim() const { return fiber_dim_; }
  Index dimension() const { return grid_size() * fiber_dim_; }
  const RealVector<Scalar>& weights() const { return weights_; }
  Scalar weight(Index i) const { return weights_(i); }
  Scalar quadrature_weight() const { return Scalar(1) / Scalar(grid_size()); }
  Scalar grid_point(Index i) const { return Scalar(i) / Scalar(grid_size()); }

  // Indices of E_w = {i : w_i > threshold}.
  std::vector<Index> support(
      Scalar threshold = Scalar(kSupportThreshold)) const {
    std::vector<Index> out;
    for (Index i = 0; i < grid_size(); ++i) {
      if (weights_(i) > threshold) out.push_back(i);
    }
    return out;
  }

  bool strictly_positive() const { return (weights_.array() > 0).all(); }

  bool unweighted(Scalar slack = Scalar(0)) const {
    return ((weights_.array() - Scalar(1)).abs() <= slack).all();
  }

  WeightedSpace scaled(Scalar factor) const {
    return WeightedSpace(weights_ * factor, fiber_dim_);
  }

 private:
  RealVector<Scalar> weights_;
  Index fiber_dim_;
};

template <typename Scalar, typename Derived>
void check_conforms(const WeightedSpace<Scalar>& space,
                    const Eigen::MatrixBase<Derived>& f) {
  if (f.rows() != space.grid_size() || f.cols() != space.fiber_dim()) {
    throw ShapeError("field is " + std::to_string(f.rows()) + "x" +
                     std::to_string(f.cols()) + ", space expects " +
                     std::to_string(space.grid_size()) + "x" +
                     std::to_string(space.fiber_dim()));
  }
}

template <typename Scalar, typename Derived>
void check_grid_function(const WeightedSpace<Scalar>& space,
                         const Eigen::MatrixBase<Derived>& phi) {
  if (phi.cols() != 1 || phi.rows() != space.grid_size()) {
    throw ShapeError("grid function has length " + std::to_string(phi.rows()) +
                     ", space expects " + std::to_string(space.grid_size()));
  }
}

// <f, g> = (1/N) sum_i <f_i, g_i>_U w_i, linear in f.
template <typename Scalar, typename DerivedF, typename DerivedG>
Complex<Scalar> inner(const WeightedSpace<Scalar>& space,
                      const Eigen::MatrixBase<DerivedF>& f,
                      const Eigen::MatrixBase<DerivedG>& g) {
  check_conforms(space, f);
  check_conforms(space, g);
  const ComplexVector<Scalar> pointwise =
      f.cwiseProduct(g.conjugate()).rowwise().sum();
  return pointwise.cwiseProduct(space.weights().template cast<Complex<Scalar>>())
             .sum() *
         space.quadrature_weight();
}

template <typename Scalar, typename Derived>
Scalar norm_sq(const WeightedSpace<Scalar>& space,
               const Eigen::MatrixBase<Derived>& f) {
  check_conforms(space, f);
  return f.rowwise().squaredNorm().dot(space.weights()) *
         space.quadrature_weight();
}

template <typename Scalar, typename Derived>
Scalar norm(const WeightedSpace<Scalar>& space,
            const Eigen::MatrixBase<Derived>& f) {
  return std::sqrt(norm_sq(space, f));
}

// Inner product of L^2_w(Omega) for scalar functions on the grid.
template <typename Scalar, typename DerivedA, typename DerivedB>
Complex<Scalar> scalar_inner(const WeightedSpace<Scalar>& space,
                             const Eigen::MatrixBase<DerivedA>& phi,
                             const Eigen::MatrixBase<DerivedB>& psi) {
  check_grid_function(space, phi);
  check_grid_function(space, psi);
  return phi.cwiseProduct(psi.conjugate())
             .cwiseProduct(space.weights().template cast<Complex<Scalar>>())
             .sum() *
         space.quadrature_weight();
}

template <typename Scalar, typename Derived>
Scalar scalar_norm_sq(const WeightedSpace<Scalar>& space,
                      const Eigen::MatrixBase<Derived>& phi) {
  check_grid_function(space, phi);
  return phi.cwiseAbs2().dot(space.weights()) * space.quadrature_weight();
}

// C = (1/N) sum_i w_i, the discrete integral of w over Omega.
template <typename Scalar>
Scalar total_mass(const WeightedSpace<Scalar>& space) {
  return space.weights().sum() * space.quadrature_weight();
}

template <typename Scalar>
Field<Scalar> zero_field(const WeightedSpace<Scalar>& space) {
  return Field<Scalar>::Zero(space.grid_size(), space.fiber_dim());
}

template <typename Scalar, typename Rng>
Field<Scalar> random_field(const WeightedSpace<Scalar>& space, Rng& rng) {
  return random_complex<Scalar>(space.grid_size(), space.fiber_dim(), rng);
}

}  // namespace gframe

#endif  // GFRAME_WSPACE_HPP_
