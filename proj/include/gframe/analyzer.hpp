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

// Classification of the scalar family {L_{m,n}}: frame, Riesz basis and
// orthonormal basis are decided from the weight alone (A = min w, B = max w)
// and every decision is cross-checked against a spectral oracle, the
// eigenvalues of the frame operator and of the synthesis Gram.
//
// With a unimodular orthonormal scalar family and an orthonormal fiber
// family the frame operator is diag(w) in w-orthonormal coordinates, so the
// oracle spectrum must be the multiset {w_i} repeated M times. A report is
// `consistent` when that identity holds to `kSpectralSlack`.

#ifndef GFRAME_ANALYZER_HPP_
#define GFRAME_ANALYZER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gframe/core.hpp"
#include "gframe/gframe_ops.hpp"
#include "gframe/tensor_onb.hpp"
#include "gframe/wspace.hpp"

namespace gframe {

// Allowed gap between the oracle spectrum and the weight samples.
inline constexpr double kSpectralSlack = 1e-9;

enum class Verdict { not_frame, frame, riesz_basis, onb };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::not_frame:
      return "not_frame";
    case Verdict::frame:
      return "frame";
    case Verdict::riesz_basis:
      return "riesz_basis";
    case Verdict::onb:
      return "onb";
  }
  return "unknown";
}

template <typename Scalar = double>
struct Bounds {
  Scalar lower{};
  Scalar upper{};
};

// Test vector phi_E with S(phi_E) = 1_E e_0.
template <typename Scalar = double>
struct Witness {
  Field<Scalar> field;
  std::vector<Index> set;
  // sum |L phi_E|^2 and ||phi_E||^2 from the two-sum formula
  // (1/N) sum_E w_i^2 and (1/N) sum_E w_i.
  Scalar energy{};
  Scalar norm_sq{};
  // energy / norm_sq; 0 when both vanish (E inside the zero set of w).
  Scalar ratio{};
  // The same ratio from applying every L_{m,n} to the field.
  Scalar operator_ratio{};
  // max_E w (lower witness) or min_E w (upper witness).
  Scalar extreme_weight{};
};

template <typename Scalar = double>
struct FrameReport {
  Verdict verdict = Verdict::not_frame;
  Bounds<Scalar> weight_bounds;
  // Extreme frame-operator eigenvalues, computed on E_w.
  Bounds<Scalar> oracle_bounds;
  std::optional<Bounds<Scalar>> gram_bounds;
  RealVector<Scalar> frame_spectrum;
  RealVector<Scalar> gram_spectrum;
  std::map<std::string, Scalar> residuals;
  std::optional<Witness<Scalar>> witness;
  Index support_size = 0;
  bool consistent = true;
};

// Grid model of the essential bounds: plain min / max of the samples.
template <typename Scalar>
Bounds<Scalar> weight_bounds(const WeightedSpace<Scalar>& space) {
  return {space.weights().minCoeff(), space.weights().maxCoeff()};
}

namespace detail {

template <typename Scalar>
Witness<Scalar> make_witness(const OperatorFamily<Scalar>& fam,
                             std::vector<Index> set) {
  const auto& space = fam.space();
  Witness<Scalar> out;
  out.field = zero_field(space);
  Scalar sum_w(0), sum_w2(0);
  for (Index i : set) {
    out.field(i, 0) = Complex<Scalar>(1);
    sum_w += space.weight(i);
    sum_w2 += space.weight(i) * space.weight(i);
  }
  const Scalar h = space.quadrature_weight();
  out.energy = sum_w2 * h;
  out.norm_sq = sum_w * h;
  out.ratio = out.energy > Scalar(0) ? out.energy / out.norm_sq : Scalar(0);
  const Scalar applied = frame_energy(fam, out.field);
  out.operator_ratio =
      out.norm_sq > Scalar(0) ? applied / out.norm_sq : Scalar(0);
  out.set = std::move(set);
  return out;
}

template <typename Scalar>
RealVector<Scalar> expected_spectrum(const WeightedSpace<Scalar>& space,
                                     const std::vector<Index>& support) {
  const Index count = static_cast<Index>(support.size());
  RealVector<Scalar> out(count * space.fiber_dim());
  for (Index j = 0; j < space.fiber_dim(); ++j) {
    for (Index p = 0; p < count; ++p) {
      out(j * count + p) = space.weight(support[static_cast<std::size_t>(p)]);
    }
  }
  return out;
}

// Spectral oracle on E_w plus the bound checks shared by every decider.
template <typename Scalar>
FrameReport<Scalar> spectral_report(const OperatorFamily<Scalar>& fam) {
  const auto& space = fam.space();
  FrameReport<Scalar> report;
  report.weight_bounds = weight_bounds(space);

  const std::vector<Index> support = space.support();
  report.support_size = static_cast<Index>(support.size());
  const ComplexMatrix<Scalar> t = analysis_matrix(fam, support);
  report.frame_spectrum = hermitian_spectrum(frame_operator(t));
  report.oracle_bounds = {report.frame_spectrum.minCoeff(),
                          report.frame_spectrum.maxCoeff()};

  // Weight bounds over the same support the oracle sees.
  const RealVector<Scalar> expected = expected_spectrum(space, support);
  const Bounds<Scalar> support_bounds{expected.minCoeff(), expected.maxCoeff()};
  const Scalar lower_gap =
      std::abs(report.oracle_bounds.lower - support_bounds.lower);
  const Scalar upper_gap =
      std::abs(report.oracle_bounds.upper - support_bounds.upper);
  const Scalar spectrum_gap =
      spectrum_distance<Scalar>(report.frame_spectrum, expected);
  report.residuals["frame_lower_bound"] = lower_gap;
  report.residuals["frame_upper_bound"] = upper_gap;
  report.residuals["frame_spectrum"] = spectrum_gap;
  report.consistent = lower_gap <= Scalar(kSpectralSlack) &&
                      upper_gap <= Scalar(kSpectralSlack) &&
                      spectrum_gap <= Scalar(kSpectralSlack);
  return report;
}

template <typename Scalar>
void add_gram_check(const OperatorFamily<Scalar>& fam,
                    FrameReport<Scalar>& report) {
  report.gram_spectrum = hermitian_spectrum(synthesis_gram(fam));
  report.gram_bounds = Bounds<Scalar>{report.gram_spectrum.minCoeff(),
                                      report.gram_spectrum.maxCoeff()};
  const auto& space = fam.space();
  const Scalar gram_spectrum_gap = spectrum_distance<Scalar>(
      report.gram_spectrum,
      space.weights().replicate(space.fiber_dim(), 1).eval());
  const Scalar slack(kSpectralSlack);
  const Scalar outside =
      std::max({Scalar(0), report.weight_bounds.lower - slack -
                               report.gram_bounds->lower,
                report.gram_bounds->upper -
                    (report.weight_bounds.upper + slack)});
  report.residuals["gram_spectrum"] = gram_spectrum_gap;
  report.residuals["gram_outside_weight_bounds"] = outside;
  report.consistent =
      report.consistent && gram_spectrum_gap <= slack && outside == Scalar(0);
}

}  // namespace detail

// If E = {i : w_i < a_claimed} is nonempty, the field 1_E e_0 violates the
// lower frame inequality with constant a_claimed:
// ratio <= max_E w < a_claimed.
template <typename Scalar>
std::optional<Witness<Scalar>> witness_lower_failure(
    const OperatorFamily<Scalar>& fam, Scalar a_claimed) {
  if (!(a_claimed > Scalar(0))) {
    throw ArgumentError("claimed lower bound must be positive");
  }
  std::vector<Index> set;
  Scalar largest(0);
  for (Index i = 0; i < fam.space().grid_size(); ++i) {
    if (fam.space().weight(i) < a_claimed) {
      set.push_back(i);
      largest = std::max(largest, fam.space().weight(i));
    }
  }
  if (set.empty()) return std::nullopt;
  auto w = detail::make_witness(fam, std::move(set));
  w.extreme_weight = largest;
  return w;
}

// Mirror image for the upper bound: E = {i : w_i > b_claimed} gives
// ratio >= min_E w > b_claimed.
template <typename Scalar>
std::optional<Witness<Scalar>> witness_upper_failure(
    const OperatorFamily<Scalar>& fam, Scalar b_claimed) {
  if (!(b_claimed > Scalar(0))) {
    throw ArgumentError("claimed upper bound must be positive");
  }
  std::vector<Index> set;
  Scalar smallest = std::numeric_limits<Scalar>::infinity();
  for (Index i = 0; i < fam.space().grid_size(); ++i) {
    if (fam.space().weight(i) > b_claimed) {
      set.push_back(i);
      smallest = std::min(smallest, fam.space().weight(i));
    }
  }
  if (set.empty()) return std::nullopt;
  auto w = detail::make_witness(fam, std::move(set));
  w.extreme_weight = smallest;
  return w;
}

// Frame iff A > tol. Oracle bounds come from the frame operator on E_w.
template <typename Scalar>
FrameReport<Scalar> decide_frame(const OperatorFamily<Scalar>& fam,
                                 Scalar tol = Scalar(kDefaultTolerance)) {
  FrameReport<Scalar> report = detail::spectral_report(fam);
  if (report.weight_bounds.lower > tol) {
    report.verdict = Verdict::frame;
  } else {
    report.verdict = Verdict::not_frame;
    report.witness = witness_lower_failure(fam, tol);
  }
  return report;
}

// Riesz basis iff A > tol; the synthesis Gram must have its spectrum inside
// [A, B] (and, for the default basis, equal to {w_i} x M).
template <typename Scalar>
FrameReport<Scalar> decide_riesz(const OperatorFamily<Scalar>& fam,
                                 Scalar tol = Scalar(kDefaultTolerance)) {
  FrameReport<Scalar> report = detail::spectral_report(fam);
  detail::add_gram_check(fam, report);
  if (report.weight_bounds.lower > tol) {
    report.verdict = Verdict::riesz_basis;
  } else {
    report.verdict = Verdict::not_frame;
    report.witness = witness_lower_failure(fam, tol);
  }
  return report;
}

// ONB iff max |w_i - 1| <= tol. Conditions (cross-orthogonality of the
// adjoint images, adjoint isometry, Parseval identity) are measured
// independently of the verdict; the Parseval identity on `trials` random
// fields drawn from `seed`.
//
// When some w_i differs from 1 the Parseval defect is exhibited by a witness
// on E = {w_i < 1} (or {w_i > 1} if the weight never dips), and
// residuals["onb3_defect_ratio"] holds its energy ratio.
template <typename Scalar>
FrameReport<Scalar> decide_onb(const OperatorFamily<Scalar>& fam,
                               Scalar tol = Scalar(kDefaultTolerance),
                               std::uint64_t seed = 0, int trials = 16) {
  FrameReport<Scalar> report = decide_riesz(fam, tol);
  const auto& space = fam.space();

  const ComplexMatrix<Scalar> gram = synthesis_gram(fam);
  ComplexMatrix<Scalar> off = gram;
  off.diagonal().setZero();
  const Scalar onb1 = off.size() > 0 ? off.cwiseAbs().maxCoeff() : Scalar(0);
  const Scalar onb2 =
      (gram.diagonal().real().array() - Scalar(1)).abs().maxCoeff();

  std::mt19937_64 rng(seed);
  Scalar onb3(0);
  for (int t = 0; t < trials; ++t) {
    const Field<Scalar> f = random_field(space, rng);
    const Scalar f_norm_sq = norm_sq(space, f);
    if (!(f_norm_sq > Scalar(0))) continue;
    onb3 = std::max(onb3,
                    std::abs(frame_energy(fam, f) / f_norm_sq - Scalar(1)));
  }
  report.residuals["onb1"] = onb1;
  report.residuals["onb2"] = onb2;
  report.residuals["onb3"] = onb3;

  const Scalar deviation =
      (space.weights().array() - Scalar(1)).abs().maxCoeff();
  report.residuals["weight_deviation"] = deviation;
  if (deviation <= tol) {
    report.verdict = Verdict::onb;
    const Scalar slack = tol + Scalar(kSupportThreshold);
    report.consistent =
        report.consistent && onb1 <= slack && onb2 <= slack && onb3 <= slack;
  } else {
    auto defect = witness_lower_failure(fam, Scalar(1));
    if (!defect) defect = witness_upper_failure(fam, Scalar(1));
    report.residuals["onb3_defect_ratio"] = defect->ratio;
    if (!report.witness) report.witness = std::move(defect);
  }
  return report;
}

// Scalar case (U = C): {L_k(f) = integral Sf conj(lambda_k) w} for a
// unimodular orthonormal basis {lambda_k} of L^2(Omega), given as the columns
// of `lambdas`. Same decision path as decide_frame.
template <typename Scalar>
FrameReport<Scalar> decide_scalar_frame(
    const WeightedSpace<Scalar>& space, const ComplexMatrix<Scalar>& lambdas,
    Scalar tol = Scalar(kDefaultTolerance)) {
  if (space.fiber_dim() != 1) {
    throw PreconditionError("scalar frame test needs fiber dimension 1");
  }
  if (lambdas.rows() != space.grid_size() ||
      lambdas.cols() != space.grid_size()) {
    throw ShapeError("scalar basis must be N x N");
  }
  const Scalar slack(1e-10);
  if (unimodularity_residual(lambdas) > slack) {
    throw PreconditionError("scalar basis is not unimodular");
  }
  const auto unweighted = WeightedSpace<Scalar>::constant(space.grid_size(), 1);
  TensorBasis<Scalar> basis{lambdas, ComplexMatrix<Scalar>::Identity(1, 1)};
  if (gram_residual(tensor_gram(unweighted, basis)) > slack) {
    throw PreconditionError("scalar basis is not orthonormal");
  }
  return decide_frame(OperatorFamily<Scalar>(space, std::move(basis)), tol);
}

}  // namespace gframe

#endif  // GFRAME_ANALYZER_HPP_
