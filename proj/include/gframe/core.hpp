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

// Common dense types, error classes and small numeric helpers shared by every
// gframe module. Everything is templated on the real scalar type; `double` is
// the default everywhere.

#ifndef GFRAME_CORE_HPP_
#define GFRAME_CORE_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace gframe {

using Index = Eigen::Index;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexMatrix =
    Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

// A scalar-valued function sampled on the grid, e.g. the output of the
// field-valued operators or an element of the scalar family.
template <typename Scalar>
using GridFunction = ComplexVector<Scalar>;

// Operand dimensions do not agree with the space they are used in.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition on the data (not the shapes) does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A scalar argument is outside its admissible range.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operator index (m, n) or translate index k is out of range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A truncated infinite sum has a tail above the accepted bound.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default threshold for bound positivity and ONB deviation.
inline constexpr double kDefaultTolerance = 1e-9;

// Grid points with weight at or below this value are outside the support E_w.
inline constexpr double kSupportThreshold = 1e-12;

template <typename Scalar>
inline constexpr Scalar kTwoPi = Scalar(2) * std::numbers::pi_v<Scalar>;

// exp(i * 2 pi * t)
template <typename Scalar>
Complex<Scalar> unit_phase(Scalar t) {
  return std::polar(Scalar(1), kTwoPi<Scalar> * t);
}

// Eigenvalues of a Hermitian matrix in ascending order.
template <typename Derived>
auto hermitian_spectrum(const Eigen::MatrixBase<Derived>& matrix) {
  using MatrixType = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<MatrixType> solver(matrix.eval(),
                                                   Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigensolver did not converge");
  }
  return solver.eigenvalues().eval();
}

// Largest entrywise deviation between two spectra sorted ascending. Returns
// +infinity when the lengths differ.
template <typename Scalar>
Scalar spectrum_distance(RealVector<Scalar> a, RealVector<Scalar> b) {
  if (a.size() != b.size()) return std::numeric_limits<Scalar>::infinity();
  if (a.size() == 0) return Scalar(0);
  std::sort(a.data(), a.data() + a.size());
  std::sort(b.data(), b.data() + b.size());
  return (a - b).cwiseAbs().maxCoeff();
}

// Matrix of i.i.d. standard complex Gaussian entries.
template <typename Scalar, typename Rng>
ComplexMatrix<Scalar> random_complex(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix<Scalar> out(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const Scalar re = static_cast<Scalar>(normal(rng));
      const Scalar im = static_cast<Scalar>(normal(rng));
      out(i, j) = Complex<Scalar>(re, im);
    }
  }
  return out;
}

}  // namespace gframe

#endif  // GFRAME_CORE_HPP_
