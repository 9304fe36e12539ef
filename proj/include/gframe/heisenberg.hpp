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

// Center translates on the Heisenberg group H^d, worked on the Fourier side.
//
// The generator psi_eps has operator-valued Fourier transform
// Psi_eps(alpha) = (u_alpha (x) u_alpha) 1_(eps,1](alpha), a rank-one
// projector, so only its Hilbert-Schmidt norm profile 1_(eps,1] enters the
// computations. With Plancherel measure |lambda|^d d lambda the periodized
// weight is
//
//   w_eps(alpha) = sum_j ||Psi_eps(alpha + j)||_HS^2 |alpha + j|^d
//                = alpha^d 1_(eps,1](alpha)   on (0, 1],
//
// and f = sum_k a_k T_k psi_eps maps to Sf(alpha) = 1_E(alpha) a(alpha) with
// a(alpha) = sum_k a_k exp(-2 pi i k alpha). Group-law composition is never
// needed here.

#ifndef GFRAME_HEISENBERG_HPP_
#define GFRAME_HEISENBERG_HPP_

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gframe/analyzer.hpp"
#include "gframe/core.hpp"
#include "gframe/shiftinv.hpp"
#include "gframe/wspace.hpp"

namespace gframe {

// Quadrature rule on (0, 1): nodes and weights.
template <typename Scalar = double>
struct AlphaGrid {
  RealVector<Scalar> nodes;
  RealVector<Scalar> weights;

  Index size() const { return nodes.size(); }

  // Uniform midpoint rule with `cells` cells.
  static AlphaGrid midpoint(Index cells) {
    if (cells < 1) throw ArgumentError("alpha grid needs at least one cell");
    AlphaGrid grid;
    grid.nodes.resize(cells);
    grid.weights = RealVector<Scalar>::Constant(cells, Scalar(1) / cells);
    for (Index i = 0; i < cells; ++i) {
      grid.nodes(i) = (Scalar(i) + Scalar(0.5)) / Scalar(cells);
    }
    return grid;
  }

  // Composite Gauss-Legendre with a break at `split` (in [0, 1]); cells are
  // shared between the two pieces in proportion to their length.
  static AlphaGrid gauss_legendre(Scalar split, Index cells, Index order);
};

// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
template <typename Scalar = double>
std::pair<RealVector<Scalar>, RealVector<Scalar>> gauss_legendre_rule(
    Index order) {
  if (order < 1) throw ArgumentError("quadrature order must be >= 1");
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix jacobi = Matrix::Zero(order, order);
  for (Index k = 1; k < order; ++k) {
    const Scalar kk = Scalar(k);
    const Scalar beta = kk / std::sqrt(Scalar(4) * kk * kk - Scalar(1));
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(jacobi);
  RealVector<Scalar> nodes = solver.eigenvalues();
  RealVector<Scalar> weights =
      Scalar(2) * solver.eigenvectors().row(0).transpose().cwiseAbs2();
  return {nodes, weights};
}

template <typename Scalar>
AlphaGrid<Scalar> AlphaGrid<Scalar>::gauss_legendre(Scalar split, Index cells,
                                                    Index order) {
  if (!(split >= Scalar(0) && split <= Scalar(1))) {
    throw ArgumentError("split point must lie in [0, 1]");
  }
  if (cells < 2) throw ArgumentError("composite rule needs >= 2 cells");
  const auto [ref_nodes, ref_weights] = gauss_legendre_rule<Scalar>(order);
  std::vector<std::pair<Scalar, Scalar>> pieces;
  if (split > Scalar(0)) pieces.emplace_back(Scalar(0), split);
  if (split < Scalar(1)) pieces.emplace_back(split, Scalar(1));

  std::vector<Scalar> nodes, weights;
  for (const auto& [lo, hi] : pieces) {
    const Index piece_cells = std::max<Index>(
        1, static_cast<Index>(std::lround(static_cast<double>(
               (hi - lo) * Scalar(cells)))));
    const Scalar h = (hi - lo) / Scalar(piece_cells);
    for (Index c = 0; c < piece_cells; ++c) {
      const Scalar mid = lo + (Scalar(c) + Scalar(0.5)) * h;
      for (Index q = 0; q < order; ++q) {
        nodes.push_back(mid + Scalar(0.5) * h * ref_nodes(q));
        weights.push_back(Scalar(0.5) * h * ref_weights(q));
      }
    }
  }
  AlphaGrid grid;
  grid.nodes = Eigen::Map<RealVector<Scalar>>(nodes.data(),
                                              static_cast<Index>(nodes.size()));
  grid.weights = Eigen::Map<RealVector<Scalar>>(
      weights.data(), static_cast<Index>(weights.size()));
  return grid;
}

namespace detail {

template <typename Scalar>
void check_heisenberg_params(Scalar eps, int dim) {
  if (!(eps >= Scalar(0) && eps <= Scalar(1))) {
    throw ArgumentError("eps must lie in [0, 1]");
  }
  if (dim < 0) throw ArgumentError("dimension d must be >= 0");
}

// Range of lattice shifts j that can reach (0, 1] from alpha in (0, 1].
inline constexpr int kPeriodizationReach = 2;

}  // namespace detail

// alpha -> Psi_eps(alpha), tracked through its HS norm 1_(eps,1](alpha).
template <typename Scalar = double>
class RankOneHSField {
 public:
  RankOneHSField(Scalar eps, int dim) : eps_(eps), dim_(dim) {
    detail::check_heisenberg_params(eps, dim);
  }

  Scalar eps() const { return eps_; }
  int dim() const { return dim_; }

  Scalar hs_norm(Scalar alpha) const {
    return (alpha > eps_ && alpha <= Scalar(1)) ? Scalar(1) : Scalar(0);
  }

  // Plancherel density |alpha|^d.
  Scalar plancherel(Scalar alpha) const {
    return std::pow(std::abs(alpha), Scalar(dim_));
  }

  // sum_j ||Psi(alpha + j)||^2 |alpha + j|^d, evaluated term by term.
  Scalar weight(Scalar alpha) const {
    Scalar total(0);
    for (int j = -detail::kPeriodizationReach; j <= detail::kPeriodizationReach;
         ++j) {
      const Scalar beta = alpha + Scalar(j);
      const Scalar hs = hs_norm(beta);
      if (hs == Scalar(0)) continue;
      total += hs * hs * plancherel(beta);
    }
    return total;
  }

  // Lower end of the weight range on E: eps^d.
  Scalar lower_bound() const { return std::pow(eps_, Scalar(dim_)); }

 private:
  Scalar eps_;
  int dim_;
};

template <typename Scalar>
Scalar hs_weight(Scalar eps, int dim, Scalar alpha) {
  if (!(alpha > Scalar(0) && alpha <= Scalar(1))) {
    throw ArgumentError("alpha must lie in (0, 1]");
  }
  return RankOneHSField<Scalar>(eps, dim).weight(alpha);
}

// alpha^d 1_(eps,1](alpha)
template <typename Scalar>
Scalar hs_weight_closed(Scalar eps, int dim, Scalar alpha) {
  return (alpha > eps && alpha <= Scalar(1)) ? std::pow(alpha, Scalar(dim))
                                             : Scalar(0);
}

// ||Psi_eps||^2 = integral over (0,1) of w_eps, by composite Gauss-Legendre
// split at eps (the integrand is a polynomial on each side).
template <typename Scalar>
Scalar psi_norm_sq(Scalar eps, int dim, Index cells = 64, Index order = 8) {
  const RankOneHSField<Scalar> field(eps, dim);
  const auto grid = AlphaGrid<Scalar>::gauss_legendre(eps, cells, order);
  Scalar total(0);
  for (Index i = 0; i < grid.size(); ++i) {
    total += grid.weights(i) * field.weight(grid.nodes(i));
  }
  return total;
}

// (1 - eps^{d+1}) / (d + 1)
template <typename Scalar>
Scalar psi_norm_sq_closed(Scalar eps, int dim) {
  return (Scalar(1) - std::pow(eps, Scalar(dim + 1))) / Scalar(dim + 1);
}

template <typename Scalar = double>
struct LemmaBounds {
  Scalar min{};
  Scalar max{};
  // eps^d
  Scalar lower_limit{};
  Index support_size = 0;
  bool holds = false;
};

// Extremes of w_eps over the grid points of E, checked against [eps^d, 1].
template <typename Scalar>
LemmaBounds<Scalar> lemma_bounds_check(Scalar eps, int dim,
                                       const AlphaGrid<Scalar>& grid,
                                       Scalar slack = Scalar(1e-12)) {
  const RankOneHSField<Scalar> field(eps, dim);
  LemmaBounds<Scalar> out;
  out.lower_limit = field.lower_bound();
  out.min = std::numeric_limits<Scalar>::infinity();
  out.max = -std::numeric_limits<Scalar>::infinity();
  for (Index i = 0; i < grid.size(); ++i) {
    const Scalar w = field.weight(grid.nodes(i));
    if (!(w > Scalar(kSupportThreshold))) continue;
    ++out.support_size;
    out.min = std::min(out.min, w);
    out.max = std::max(out.max, w);
  }
  if (out.support_size == 0) {
    throw PreconditionError("E_w is empty on this grid");
  }
  out.holds = out.min >= out.lower_limit - slack && out.max <= Scalar(1) + slack;
  return out;
}

// Span of {T_k psi_eps} sampled on an alpha grid.
template <typename Scalar = double>
class CenterTranslateModel {
 public:
  CenterTranslateModel(RankOneHSField<Scalar> field, AlphaGrid<Scalar> grid)
      : field_(std::move(field)), grid_(std::move(grid)) {
    weights_.resize(grid_.size());
    for (Index i = 0; i < grid_.size(); ++i) {
      weights_(i) = field_.weight(grid_.nodes(i));
    }
  }

  const RankOneHSField<Scalar>& field() const { return field_; }
  const AlphaGrid<Scalar>& grid() const { return grid_; }
  const RealVector<Scalar>& weights() const { return weights_; }
  bool in_support(Index i) const {
    return weights_(i) > Scalar(kSupportThreshold);
  }

 private:
  RankOneHSField<Scalar> field_;
  AlphaGrid<Scalar> grid_;
  RealVector<Scalar> weights_;
};

// Sf on the grid from the defining sum
//   1_E w^{-1} sum_j <f^(alpha+j), psi^(alpha+j)>_HS |alpha+j|^d,
// where f^(beta) = a(beta) Psi(beta), so the HS pairing is a(beta) ||Psi||^2.
template <typename Scalar>
ComplexVector<Scalar> s_map(const CenterTranslateModel<Scalar>& model,
                            const TranslateSum<Scalar>& a) {
  const auto& field = model.field();
  const auto& grid = model.grid();
  ComplexVector<Scalar> out = ComplexVector<Scalar>::Zero(grid.size());
  for (Index i = 0; i < grid.size(); ++i) {
    if (!model.in_support(i)) continue;
    const Scalar alpha = grid.nodes(i);
    Complex<Scalar> total(0);
    for (int j = -detail::kPeriodizationReach;
         j <= detail::kPeriodizationReach; ++j) {
      const Scalar beta = alpha + Scalar(j);
      const Scalar hs = field.hs_norm(beta);
      if (hs == Scalar(0)) continue;
      total += a.symbol(beta) * hs * hs * field.plancherel(beta);
    }
    out(i) = total / model.weights()(i);
  }
  return out;
}

// 1_E(alpha) sum_k a_k exp(-2 pi i k alpha)
template <typename Scalar>
ComplexVector<Scalar> s_map_closed(const CenterTranslateModel<Scalar>& model,
                                   const TranslateSum<Scalar>& a) {
  const auto& grid = model.grid();
  ComplexVector<Scalar> out = ComplexVector<Scalar>::Zero(grid.size());
  for (Index i = 0; i < grid.size(); ++i) {
    if (model.in_support(i)) out(i) = a.symbol(grid.nodes(i));
  }
  return out;
}

// integral of |g|^2 w_eps over (0, 1)
template <typename Scalar>
Scalar weighted_norm_sq(const CenterTranslateModel<Scalar>& model,
                        const ComplexVector<Scalar>& values) {
  return (values.cwiseAbs2().array() * model.weights().array() *
          model.grid().weights.array())
      .sum();
}

// ||f||^2 through the periodized Plancherel formula:
// integral over (0,1) of sum_j ||f^(alpha+j)||_HS^2 |alpha+j|^d.
template <typename Scalar>
Scalar periodized_norm_sq(const CenterTranslateModel<Scalar>& model,
                          const TranslateSum<Scalar>& a) {
  const auto& field = model.field();
  const auto& grid = model.grid();
  Scalar total(0);
  for (Index i = 0; i < grid.size(); ++i) {
    Scalar inner_sum(0);
    for (int j = -detail::kPeriodizationReach;
         j <= detail::kPeriodizationReach; ++j) {
      const Scalar beta = grid.nodes(i) + Scalar(j);
      const Scalar hs = field.hs_norm(beta);
      if (hs == Scalar(0)) continue;
      inner_sum += std::norm(a.symbol(beta)) * hs * hs * field.plancherel(beta);
    }
    total += grid.weights(i) * inner_sum;
  }
  return total;
}

// | ||Sf||^2_{w} - ||f||^2 | / ||f||^2
template <typename Scalar>
Scalar isometry_residual(const CenterTranslateModel<Scalar>& model,
                         const TranslateSum<Scalar>& a) {
  const Scalar lhs = weighted_norm_sq(model, s_map(model, a));
  const Scalar rhs = periodized_norm_sq(model, a);
  if (!(rhs > Scalar(0))) return std::abs(lhs);
  return std::abs(lhs - rhs) / rhs;
}

// L_k(f) = integral over E of Sf(alpha) w(alpha) exp(2 pi i k alpha), i.e.
// the Sf-pairing with lambda_k(alpha) = exp(-2 pi i k alpha).
template <typename Scalar>
Complex<Scalar> lambda_k(const CenterTranslateModel<Scalar>& model, Index k,
                         const TranslateSum<Scalar>& a) {
  const ComplexVector<Scalar> sf = s_map(model, a);
  const auto& grid = model.grid();
  Complex<Scalar> total(0);
  for (Index i = 0; i < grid.size(); ++i) {
    total += grid.weights(i) * model.weights()(i) * sf(i) *
             unit_phase(Scalar(k) * grid.nodes(i));
  }
  return total;
}

// <T_l psi, T_k psi> = integral of w_eps exp(-2 pi i (l - k) alpha).
template <typename Scalar>
Complex<Scalar> translate_inner(const CenterTranslateModel<Scalar>& model,
                                Index l, Index k) {
  const auto& grid = model.grid();
  Complex<Scalar> total(0);
  for (Index i = 0; i < grid.size(); ++i) {
    total += grid.weights(i) * model.weights()(i) *
             unit_phase(-Scalar(l - k) * grid.nodes(i));
  }
  return total;
}

// <f, T_k psi> = sum_l a_l <T_l psi, T_k psi>, coefficient side.
template <typename Scalar>
Complex<Scalar> translate_pairing(const CenterTranslateModel<Scalar>& model,
                                  Index k, const TranslateSum<Scalar>& a) {
  Complex<Scalar> total(0);
  for (Index j = 0; j < a.coefficients.size(); ++j) {
    total += a.coefficients(j) * translate_inner(model, a.offset + j, k);
  }
  return total;
}

template <typename Scalar = double>
struct TranslateFrame {
  FrameReport<Scalar> report;
  // [eps^d, 1]
  Bounds<Scalar> admissible;
  bool within = false;
};

// Frame test for {L_k} on a uniform midpoint grid of `resolution` points,
// with lambda_k(alpha_i) = exp(-2 pi i k alpha_i), k = 0..resolution-1.
// Bounds and verdict refer to E = {w_eps > 0}.
template <typename Scalar>
TranslateFrame<Scalar> center_translate_frame(
    const RankOneHSField<Scalar>& field, Index resolution,
    Scalar tol = Scalar(kDefaultTolerance),
    Scalar slack = Scalar(kSpectralSlack)) {
  const auto grid = AlphaGrid<Scalar>::midpoint(resolution);
  RealVector<Scalar> w(resolution);
  for (Index i = 0; i < resolution; ++i) w(i) = field.weight(grid.nodes(i));
  const WeightedSpace<Scalar> space(w, 1);

  ComplexMatrix<Scalar> lambdas(resolution, resolution);
  for (Index k = 0; k < resolution; ++k) {
    for (Index i = 0; i < resolution; ++i) {
      // alpha_i = (2i + 1) / (2 resolution); reduce k(2i+1) mod 2 resolution.
      const Index phase = (k * (2 * i + 1)) % (2 * resolution);
      lambdas(i, k) = unit_phase(-Scalar(phase) / Scalar(2 * resolution));
    }
  }

  TranslateFrame<Scalar> out;
  out.report = decide_scalar_frame(space, lambdas, tol);
  // S maps the span of the translates onto L^2_w(E), so the verdict is taken
  // over E; the zeros of w off E are not a lower-bound failure.
  if (out.report.support_size > 0 && out.report.oracle_bounds.lower > tol) {
    out.report.verdict = Verdict::frame;
    out.report.witness.reset();
  }
  out.admissible = {field.lower_bound(), Scalar(1)};
  out.within = out.report.oracle_bounds.lower >= out.admissible.lower - slack &&
               out.report.oracle_bounds.upper <= out.admissible.upper + slack;
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert-Schmidt norm of a rank-one operator u (x) u from samples of u.

template <typename Scalar = double>
struct WindowSamples {
  // One-dimensional factor of a separable window on [0, extent)^d, sampled
  // at cell midpoints.
  ComplexVector<Scalar> values;
  Scalar spacing{};
  int dim = 1;
};

// u_alpha(x) = alpha^{d/2} 1_[0,1]^d(alpha x), the unitary dilation of the
// unit-cube indicator.
template <typename Scalar>
WindowSamples<Scalar> dilated_window(Scalar alpha, int dim, Scalar extent,
                                     Index samples) {
  if (!(alpha > Scalar(0))) throw ArgumentError("alpha must be positive");
  if (dim < 1) throw ArgumentError("window dimension must be >= 1");
  if (samples < 1 || !(extent > Scalar(0))) {
    throw ArgumentError("window grid must be nonempty");
  }
  if (Scalar(1) / alpha > extent) {
    throw ArgumentError("window support [0, 1/alpha] exceeds the grid extent");
  }
  WindowSamples<Scalar> out;
  out.dim = dim;
  out.spacing = extent / Scalar(samples);
  out.values.resize(samples);
  const Scalar height = std::sqrt(alpha);
  for (Index i = 0; i < samples; ++i) {
    const Scalar x = (Scalar(i) + Scalar(0.5)) * out.spacing;
    out.values(i) =
        Complex<Scalar>(alpha * x <= Scalar(1) ? height : Scalar(0));
  }
  return out;
}

// ||u (x) u||_HS = sqrt(trace((u (x) u)(u (x) u)^*)) from the discretized
// kernel K(x, y) = u(x) conj(u(y)); a separable d-dimensional window raises
// the one-dimensional value to the power d.
template <typename Scalar>
Scalar hs_rank_one_norm(const WindowSamples<Scalar>& window) {
  if (window.values.size() > 4096) {
    throw ArgumentError("kernel discretization limited to 4096 samples");
  }
  const ComplexMatrix<Scalar> kernel =
      window.values * window.values.adjoint();
  const Scalar hs = kernel.norm() * window.spacing;
  return std::pow(hs, Scalar(window.dim));
}

}  // namespace gframe

#endif  // GFRAME_HEISENBERG_HPP_
