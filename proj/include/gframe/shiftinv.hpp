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

// Integer translates of a generator phi on the real line, d = 1 and
// Gamma = Z.
//
// The generator is given by its Fourier samples on [-R, R) with step 1/N, so
// that xi_j = -R + j / N and every integer translate of a point of [0, 1)
// lands on a sample. The periodization (bracket) weight
//
//   w(x) = sum_n |phi^(x + n)|^2
//
// drives the frame property of {L_k(f) = <f, T_k phi>}. The time side of the
// same discrete model has step 1 / (2R) and period N, reached by an inverse
// DFT of the samples.
//
// The second half covers the finite Zak transform and the Gabor system
// {M_m T_n phi} it diagonalizes.

#ifndef GFRAME_SHIFTINV_HPP_
#define GFRAME_SHIFTINV_HPP_

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gframe/analyzer.hpp"
#include "gframe/core.hpp"
#include "gframe/tensor_onb.hpp"
#include "gframe/wspace.hpp"

namespace gframe {

template <typename Scalar = double>
struct Generator {
  // Samples per unit frequency interval.
  Index grid_size = 0;
  // Truncation radius; samples cover [-R, R).
  Index radius = 0;
  ComplexVector<Scalar> fhat;
  // Bound on sum_{n outside [-R, R)} sup_x |phi^(x + n)|^2.
  Scalar decay_tail = Scalar(0);

  Index sample_count() const { return 2 * radius * grid_size; }
  Scalar frequency(Index j) const {
    return Scalar(j) / Scalar(grid_size) - Scalar(radius);
  }
  // Sample position of x_i + n, x_i = i / N.
  Index sample_index(Index i, Index n) const {
    return (n + radius) * grid_size + i;
  }
  Scalar time_step() const { return Scalar(1) / Scalar(2 * radius); }
};

template <typename Scalar>
void validate(const Generator<Scalar>& gen) {
  if (gen.grid_size < 1 || gen.radius < 1) {
    throw ArgumentError("generator needs grid_size >= 1 and radius >= 1");
  }
  if (gen.fhat.size() != gen.sample_count()) {
    throw ShapeError("generator has " + std::to_string(gen.fhat.size()) +
                     " samples, expected 2*R*N = " +
                     std::to_string(gen.sample_count()));
  }
  if (!gen.fhat.allFinite()) throw ArgumentError("generator samples not finite");
  if (!(gen.decay_tail >= Scalar(0))) {
    throw ArgumentError("decay tail must be nonnegative");
  }
}

// Samples fn(xi_j) on the generator grid.
template <typename Scalar, typename Fn>
Generator<Scalar> sample_generator(Index grid_size, Index radius, Fn&& fn,
                                   Scalar decay_tail = Scalar(0)) {
  Generator<Scalar> gen;
  gen.grid_size = grid_size;
  gen.radius = radius;
  gen.decay_tail = decay_tail;
  if (grid_size < 1 || radius < 1) {
    throw ArgumentError("generator needs grid_size >= 1 and radius >= 1");
  }
  gen.fhat.resize(gen.sample_count());
  for (Index j = 0; j < gen.sample_count(); ++j) {
    gen.fhat(j) = Complex<Scalar>(fn(gen.frequency(j)));
  }
  return gen;
}

// phi^ = 1_[0,1), sampled on the half-open interval.
template <typename Scalar = double>
Generator<Scalar> indicator_generator(Index grid_size, Index radius = 1) {
  return sample_generator<Scalar>(grid_size, radius, [](Scalar xi) {
    return (xi >= Scalar(0) && xi < Scalar(1)) ? Scalar(1) : Scalar(0);
  });
}

// phi^ = 1_[0,2) / sqrt(2).
template <typename Scalar = double>
Generator<Scalar> wide_indicator_generator(Index grid_size, Index radius = 2) {
  if (radius < 2) throw ArgumentError("wide indicator needs radius >= 2");
  const Scalar height = Scalar(1) / std::sqrt(Scalar(2));
  return sample_generator<Scalar>(grid_size, radius, [height](Scalar xi) {
    return (xi >= Scalar(0) && xi < Scalar(2)) ? height : Scalar(0);
  });
}

// phi^(xi) = exp(-pi xi^2). The reported tail sums the suprema of the
// dropped translates, which sit at distance >= R from the origin.
template <typename Scalar = double>
Generator<Scalar> gaussian_generator(Index grid_size, Index radius = 4) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar tail(0);
  for (Index n = radius; n < radius + 64; ++n) {
    tail += Scalar(2) * std::exp(-Scalar(2) * pi * Scalar(n * n));
  }
  return sample_generator<Scalar>(
      grid_size, radius, [pi](Scalar xi) { return std::exp(-pi * xi * xi); },
      tail);
}

// w(x_i) = sum_{n=-R}^{R-1} |phi^(x_i + n)|^2 on the grid x_i = i / N.
template <typename Scalar>
RealVector<Scalar> periodized_weight(const Generator<Scalar>& gen,
                                     Scalar max_tail = Scalar(1e-6)) {
  validate(gen);
  if (gen.decay_tail > max_tail) {
    throw TruncationError("periodization tail bound " +
                          std::to_string(static_cast<double>(gen.decay_tail)) +
                          " exceeds " +
                          std::to_string(static_cast<double>(max_tail)));
  }
  RealVector<Scalar> w = RealVector<Scalar>::Zero(gen.grid_size);
  for (Index n = -gen.radius; n < gen.radius; ++n) {
    for (Index i = 0; i < gen.grid_size; ++i) {
      w(i) += std::norm(gen.fhat(gen.sample_index(i, n)));
    }
  }
  return w;
}

// phi(t_m) for t_m = m / (2R), m = 0..2RN-1, periodic with period N.
template <typename Scalar>
ComplexVector<Scalar> time_samples(const Generator<Scalar>& gen) {
  validate(gen);
  const Index count = gen.sample_count();
  Eigen::FFT<Scalar> fft;
  fft.SetFlag(Eigen::FFT<Scalar>::Unscaled);
  ComplexVector<Scalar> out(count);
  ComplexVector<Scalar> in = gen.fhat;
  fft.inv(out, in);
  // exp(2 pi i t_m xi_j) = (-1)^m exp(2 pi i m j / P); the 1/N is d(xi).
  for (Index m = 0; m < count; ++m) {
    const Scalar sign = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
    out(m) *= sign / Scalar(gen.grid_size);
  }
  return out;
}

// ||phi||^2 on the time side.
template <typename Scalar>
Scalar time_energy(const Generator<Scalar>& gen) {
  return time_samples(gen).squaredNorm() * gen.time_step();
}

// f = sum_j coefficients(j) T_{offset + j} phi.
template <typename Scalar = double>
struct TranslateSum {
  Index offset = 0;
  ComplexVector<Scalar> coefficients;

  Index first() const { return offset; }
  Index last() const { return offset + coefficients.size() - 1; }
  Complex<Scalar> at(Index k) const {
    const Index j = k - offset;
    return (j < 0 || j >= coefficients.size()) ? Complex<Scalar>(0)
                                               : coefficients(j);
  }
  // sum_k a_k exp(-2 pi i k x)
  Complex<Scalar> symbol(Scalar x) const {
    Complex<Scalar> total(0);
    for (Index j = 0; j < coefficients.size(); ++j) {
      total += coefficients(j) * unit_phase(-Scalar(offset + j) * x);
    }
    return total;
  }
};

namespace detail {

template <typename Scalar>
void check_translate(const Generator<Scalar>& gen, Index k) {
  // Translates wrap with period N on the time side.
  if (2 * std::abs(k) > gen.grid_size - 1) {
    throw IndexError("translate " + std::to_string(k) +
                     " beyond representable range for period " +
                     std::to_string(gen.grid_size));
  }
}

template <typename Scalar>
ComplexVector<Scalar> shifted(const ComplexVector<Scalar>& samples,
                              Index shift) {
  const Index count = samples.size();
  ComplexVector<Scalar> out(count);
  for (Index m = 0; m < count; ++m) {
    out(m) = samples(((m - shift) % count + count) % count);
  }
  return out;
}

}  // namespace detail

template <typename Scalar = double>
struct TranslationPairing {
  // integral over [0,1) of sum_n f^(x+n) conj(phi^(x+n)) exp(2 pi i k x)
  Complex<Scalar> fourier_side;
  // <f, T_k phi> from the time samples
  Complex<Scalar> time_side;
  Scalar residual{};
};

// L_k(f) = <f, T_k phi> by both routes.
template <typename Scalar>
TranslationPairing<Scalar> translation_pairing(const Generator<Scalar>& gen,
                                               Index k,
                                               const TranslateSum<Scalar>& f) {
  validate(gen);
  detail::check_translate(gen, k);
  if (f.coefficients.size() > 0) {
    detail::check_translate(gen, f.first());
    detail::check_translate(gen, f.last());
  }
  TranslationPairing<Scalar> out;

  Complex<Scalar> fourier(0);
  for (Index i = 0; i < gen.grid_size; ++i) {
    const Scalar x = Scalar(i) / Scalar(gen.grid_size);
    Complex<Scalar> bracket(0);
    for (Index n = -gen.radius; n < gen.radius; ++n) {
      const Index j = gen.sample_index(i, n);
      const Complex<Scalar> phi_hat = gen.fhat(j);
      const Complex<Scalar> f_hat = f.symbol(gen.frequency(j)) * phi_hat;
      bracket += f_hat * std::conj(phi_hat);
    }
    fourier += bracket * unit_phase(Scalar(k) * x);
  }
  out.fourier_side = fourier / Scalar(gen.grid_size);

  const ComplexVector<Scalar> phi = time_samples(gen);
  const Index step = 2 * gen.radius;
  ComplexVector<Scalar> f_time = ComplexVector<Scalar>::Zero(phi.size());
  for (Index j = 0; j < f.coefficients.size(); ++j) {
    f_time += f.coefficients(j) * detail::shifted(phi, step * (f.offset + j));
  }
  const ComplexVector<Scalar> phi_k = detail::shifted(phi, step * k);
  // <a, b> = dt * sum a conj(b); Eigen's dot conjugates its first argument.
  out.time_side = phi_k.dot(f_time) * gen.time_step();
  out.residual = std::abs(out.fourier_side - out.time_side);
  return out;
}

// The Fourier-side value of L_k(f).
template <typename Scalar>
Complex<Scalar> translation_coefficient(const Generator<Scalar>& gen, Index k,
                                        const TranslateSum<Scalar>& f) {
  return translation_pairing(gen, k, f).fourier_side;
}

// Gram of the N cyclic translates on the time side: entry (l, k) is
// <T_k phi, T_l phi>. It is circulant, so its spectrum is the weight samples.
template <typename Scalar>
ComplexMatrix<Scalar> translate_gram(const Generator<Scalar>& gen) {
  const ComplexVector<Scalar> phi = time_samples(gen);
  const Index n = gen.grid_size;
  const Index step = 2 * gen.radius;
  ComplexMatrix<Scalar> translates(phi.size(), n);
  for (Index k = 0; k < n; ++k) {
    translates.col(k) = detail::shifted(phi, step * k);
  }
  return translates.adjoint() * translates * Complex<Scalar>(gen.time_step());
}

template <typename Scalar = double>
struct GeneratorAnalysis {
  RealVector<Scalar> weights;
  // (1/N) sum w against ||phi||^2 computed on the time side.
  Scalar mass{};
  Scalar energy{};
  FrameReport<Scalar> report;
  Bounds<Scalar> translate_gram_bounds;
  // max over the two extremes of |gram - weight bound| / max(1, B).
  Scalar transfer_residual{};
};

// Periodized weight, analyzer verdict on it and the translate-Gram check.
template <typename Scalar>
GeneratorAnalysis<Scalar> analyze_generator(
    const Generator<Scalar>& gen, Scalar tol = Scalar(kDefaultTolerance)) {
  GeneratorAnalysis<Scalar> out;
  out.weights = periodized_weight(gen);
  const WeightedSpace<Scalar> space(out.weights, 1);
  out.mass = total_mass(space);
  out.energy = time_energy(gen);
  out.report =
      decide_scalar_frame(space, dft_family<Scalar>(gen.grid_size), tol);
  const RealVector<Scalar> spectrum = hermitian_spectrum(translate_gram(gen));
  out.translate_gram_bounds = {spectrum.minCoeff(), spectrum.maxCoeff()};
  const Scalar scale = std::max(Scalar(1), out.report.weight_bounds.upper);
  out.transfer_residual =
      std::max(std::abs(out.translate_gram_bounds.lower -
                        out.report.weight_bounds.lower),
               std::abs(out.translate_gram_bounds.upper -
                        out.report.weight_bounds.upper)) /
      scale;
  return out;
}

// ---------------------------------------------------------------------------
// Finite Zak transform.
//
// A window is a periodic signal of length N * L: sample j sits at t = j / N,
// so N samples cover one unit period and L integer translates fit in the
// signal. Z phi(x_j, xi_k) = sum_l phi[j + l N] exp(2 pi i k l / L) on the
// N x L grid x_j = j / N, xi_k = k / L.

template <typename Scalar = double>
struct ZakGrid {
  ComplexMatrix<Scalar> values;
  Index samples_per_period = 0;
  Index periods = 0;
};

namespace detail {

inline void check_window_shape(Index length, Index samples_per_period,
                               Index periods) {
  if (samples_per_period < 1 || periods < 1) {
    throw ArgumentError("window needs N >= 1 and L >= 1");
  }
  if (length != samples_per_period * periods) {
    throw ShapeError("window has " + std::to_string(length) +
                     " samples, expected N*L = " +
                     std::to_string(samples_per_period * periods));
  }
}

}  // namespace detail

template <typename Scalar>
ZakGrid<Scalar> zak_transform(const ComplexVector<Scalar>& phi,
                              Index samples_per_period, Index periods) {
  detail::check_window_shape(phi.size(), samples_per_period, periods);
  ZakGrid<Scalar> grid;
  grid.samples_per_period = samples_per_period;
  grid.periods = periods;
  grid.values.resize(samples_per_period, periods);
  Eigen::FFT<Scalar> fft;
  fft.SetFlag(Eigen::FFT<Scalar>::Unscaled);
  ComplexVector<Scalar> row(periods), out(periods);
  for (Index j = 0; j < samples_per_period; ++j) {
    for (Index l = 0; l < periods; ++l) row(l) = phi(j + l * samples_per_period);
    // Unscaled inverse DFT carries the exp(+2 pi i k l / L) kernel.
    fft.inv(out, row);
    grid.values.row(j) = out.transpose();
  }
  return grid;
}

// Defining sum at any integer grid position (j, k), indices taken cyclically
// in the signal.
template <typename Scalar>
Complex<Scalar> zak_value(const ComplexVector<Scalar>& phi,
                          Index samples_per_period, Index periods, Index j,
                          Index k) {
  detail::check_window_shape(phi.size(), samples_per_period, periods);
  const Index length = phi.size();
  Complex<Scalar> total(0);
  for (Index l = 0; l < periods; ++l) {
    const Index pos = ((j + l * samples_per_period) % length + length) % length;
    const Index phase = ((k * l) % periods + periods) % periods;
    total += phi(pos) * unit_phase(Scalar(phase) / Scalar(periods));
  }
  return total;
}

// max over the grid of |Z(x+1, xi) - exp(-2 pi i xi) Z(x, xi)| and
// |Z(x, xi+1) - Z(x, xi)|, the former evaluated on wrapped indices.
template <typename Scalar>
Scalar quasi_periodicity_residual(const ComplexVector<Scalar>& phi,
                                  const ZakGrid<Scalar>& grid) {
  const Index n = grid.samples_per_period;
  const Index l = grid.periods;
  Scalar worst(0);
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < l; ++k) {
      const Complex<Scalar> z = grid.values(j, k);
      const Complex<Scalar> shifted_x = zak_value(phi, n, l, j + n, k);
      const Complex<Scalar> shifted_xi = zak_value(phi, n, l, j, k + l);
      worst = std::max(
          worst,
          std::abs(shifted_x - unit_phase(-Scalar(k) / Scalar(l)) * z));
      worst = std::max(worst, std::abs(shifted_xi - z));
    }
  }
  return worst;
}

// Indicator of the first unit period.
template <typename Scalar = double>
ComplexVector<Scalar> indicator_window(Index samples_per_period,
                                       Index periods) {
  detail::check_window_shape(samples_per_period * periods, samples_per_period,
                             periods);
  ComplexVector<Scalar> phi =
      ComplexVector<Scalar>::Zero(samples_per_period * periods);
  phi.head(samples_per_period).setOnes();
  return phi;
}

// 2^{1/4} exp(-pi t^2), centered at t = 0 and wrapped to [-L/2, L/2).
template <typename Scalar = double>
ComplexVector<Scalar> gaussian_window(Index samples_per_period, Index periods) {
  detail::check_window_shape(samples_per_period * periods, samples_per_period,
                             periods);
  const Index length = samples_per_period * periods;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar scale = std::pow(Scalar(2), Scalar(0.25));
  ComplexVector<Scalar> phi(length);
  for (Index j = 0; j < length; ++j) {
    Scalar t = Scalar(j) / Scalar(samples_per_period);
    if (t >= Scalar(periods) / Scalar(2)) t -= Scalar(periods);
    phi(j) = Complex<Scalar>(scale * std::exp(-pi * t * t));
  }
  return phi;
}

// Gram of {M_m T_n phi : m < N, n < L} under <a, b> = (1/N) sum a conj(b).
// Elements are ordered n * N + m; entry (a, b) is <e_b, e_a>.
template <typename Scalar>
ComplexMatrix<Scalar> gabor_gram(const ComplexVector<Scalar>& phi,
                                 Index samples_per_period, Index periods) {
  detail::check_window_shape(phi.size(), samples_per_period, periods);
  const Index length = phi.size();
  ComplexMatrix<Scalar> system(length, length);
  for (Index n = 0; n < periods; ++n) {
    const ComplexVector<Scalar> translate =
        detail::shifted(phi, n * samples_per_period);
    for (Index m = 0; m < samples_per_period; ++m) {
      auto col = system.col(n * samples_per_period + m);
      for (Index j = 0; j < length; ++j) {
        const Index phase = (m * j) % samples_per_period;
        col(j) = translate(j) *
                 unit_phase(Scalar(phase) / Scalar(samples_per_period));
      }
    }
  }
  return system.adjoint() * system /
         Complex<Scalar>(Scalar(samples_per_period));
}

enum class GaborVerdict { not_riesz, riesz, onb };

constexpr std::string_view to_string(GaborVerdict v) {
  switch (v) {
    case GaborVerdict::not_riesz:
      return "not_riesz";
    case GaborVerdict::riesz:
      return "riesz";
    case GaborVerdict::onb:
      return "onb";
  }
  return "unknown";
}

template <typename Scalar = double>
struct GaborReport {
  GaborVerdict verdict = GaborVerdict::not_riesz;
  // (min, max) of |Z phi|^2 over the grid.
  Bounds<Scalar> zak_bounds;
  // Extreme eigenvalues of the Gabor Gram.
  Bounds<Scalar> gram_bounds;
  // Largest bound gap relative to max(1, B_z).
  Scalar residual{};
  bool consistent = true;
  ZakGrid<Scalar> zak;
};

// Riesz iff min |Z phi|^2 > tol; ONB when both Zak bounds are within tol of 1.
template <typename Scalar>
GaborReport<Scalar> gabor_riesz_check(const ComplexVector<Scalar>& phi,
                                      Index samples_per_period, Index periods,
                                      Scalar tol = Scalar(kDefaultTolerance),
                                      Scalar relative_slack = Scalar(1e-6)) {
  GaborReport<Scalar> report;
  report.zak = zak_transform(phi, samples_per_period, periods);
  const auto magnitude = report.zak.values.cwiseAbs2();
  report.zak_bounds = {magnitude.minCoeff(), magnitude.maxCoeff()};

  const RealVector<Scalar> spectrum =
      hermitian_spectrum(gabor_gram(phi, samples_per_period, periods));
  report.gram_bounds = {spectrum.minCoeff(), spectrum.maxCoeff()};
  const Scalar scale = std::max(Scalar(1), report.zak_bounds.upper);
  report.residual =
      std::max(std::abs(report.gram_bounds.lower - report.zak_bounds.lower),
               std::abs(report.gram_bounds.upper - report.zak_bounds.upper)) /
      scale;
  report.consistent = report.residual <= relative_slack;

  if (report.zak_bounds.lower > tol) {
    const bool unit = std::abs(report.zak_bounds.lower - Scalar(1)) <= tol &&
                      std::abs(report.zak_bounds.upper - Scalar(1)) <= tol;
    report.verdict = unit ? GaborVerdict::onb : GaborVerdict::riesz;
  }
  return report;
}

}  // namespace gframe

#endif  // GFRAME_SHIFTINV_HPP_
