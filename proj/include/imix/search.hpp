// Copyright 2026 The imix authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Desk-scale extremality oracles: random-restart ascent for the maximum
// imaginarity at fixed mixedness, an exhaustive qubit grid oracle, and the
// qutrit incoherent-unitary witness. All are deterministic for a given seed
// and independent of the analytic MIMS constructions they are used to check.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "imix/measures.hpp"
#include "imix/mims.hpp"
#include "imix/rng.hpp"
#include "imix/states.hpp"

namespace imix {

struct SearchResult {
  DensityMatrix best_state;
  double best_m_l1 = 0.0;
  double bound = 0.0;  // (d-1) sqrt(1-s), the trade-off ceiling
  double gap = 0.0;    // bound - best_m_l1, never meaningfully negative
  std::int64_t evals = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline double off_diag_imag_l1(const DenseMatrix& m) {
  const int d = static_cast<int>(m.rows());
  double sum = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      if (j != k) sum += std::abs(m(j, k).imag());
  return sum;
}

// Random spectrum on the slice {sum lambda = 1, sum lambda^2 = purity,
// lambda >= 0}: scale a simplex sample radially around the centroid; fall
// back to the one-large-eigenvalue pencil when scaling leaves the simplex.
inline Eigen::VectorXd sample_spectrum(int dim, double purity, Rng& rng) {
  const double centroid = 1.0 / dim;
  const double radius_sq = purity - centroid;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXd x(dim);
    double total = 0.0;
    for (int j = 0; j < dim; ++j) {
      x(j) = -std::log((static_cast<double>(rng.next_u64() >> 11) + 1.0) *
                       0x1.0p-53);
      total += x(j);
    }
    x /= total;
    const Eigen::VectorXd dev = x.array() - centroid;
    const double n2 = dev.squaredNorm();
    if (n2 < 1e-14) continue;
    const double t = std::sqrt(std::max(radius_sq, 0.0) / n2);
    Eigen::VectorXd lambda = (centroid + t * dev.array()).matrix();
    if (lambda.minCoeff() >= 0.0) return lambda;
  }
  const double q =
      std::sqrt(std::max(dim * purity - 1.0, 0.0) / (dim - 1.0));
  Eigen::VectorXd lambda =
      Eigen::VectorXd::Constant(dim, (1.0 - q) / dim);
  lambda(0) = (1.0 + (dim - 1.0) * q) / dim;
  return lambda;
}

inline DenseMatrix haar_unitary(int dim, Rng& rng) {
  const DenseMatrix g = rng.ginibre(dim);
  Eigen::HouseholderQR<DenseMatrix> qr(g);
  DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(dim, dim);
  const DenseMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
  }
  return q;
}

// Hermitian direction with zero real part and zero diagonal: i * A for a
// random real antisymmetric A, normalized to unit Frobenius norm. Adding it
// moves only the imaginary parts of the state.
inline DenseMatrix imaginary_direction(int dim, Rng& rng) {
  DenseMatrix dir = DenseMatrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) {
      const double a = rng.gaussian();
      dir(j, k) = Complex(0.0, a);
      dir(k, j) = Complex(0.0, -a);
    }
  const double n = dir.norm();
  if (n > 0.0) dir /= n;
  return dir;
}

// Traceless real symmetric Hermitian direction, used between the imaginary
// steps so the ascent can also flush real-part residuals that the imaginary
// directions only reach at second order through the projection.
inline DenseMatrix symmetric_direction(int dim, Rng& rng) {
  Eigen::MatrixXd a(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = j; k < dim; ++k) {
      const double g = rng.gaussian();
      a(j, k) = g;
      a(k, j) = g;
    }
  a.diagonal().array() -= a.trace() / dim;
  const double n = a.norm();
  if (n > 0.0) a /= n;
  return a.cast<Complex>();
}

// Projects a Hermitian matrix back onto the fixed-purity slice. In the
// eigenbasis this is a projection onto {sum = 1, sum of squares = purity,
// lambda >= 0}: keep the largest `keep` eigenvalues, shift them to unit sum,
// rescale radially around their centroid to hit the purity exactly, zero the
// rest; the largest support with a nonnegative solution wins. Returns
// nothing when no support works (the caller then halves the step).
inline std::optional<DenseMatrix> project_to_slice(const DenseMatrix& m,
                                                   double purity) {
  const int dim = static_cast<int>(m.rows());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(m);
  const Eigen::VectorXd lambda = es.eigenvalues();  // ascending
  for (int keep = dim; keep >= 1; --keep) {
    const double centroid = 1.0 / keep;
    const double radius_sq = purity - centroid;
    if (radius_sq < -1e-14) continue;
    double sub_sum = 0.0;
    for (int j = dim - keep; j < dim; ++j) sub_sum += lambda(j);
    const double shift = (1.0 - sub_sum) / keep;
    Eigen::VectorXd kept(keep);
    double n2 = 0.0;
    for (int j = 0; j < keep; ++j) {
      kept(j) = lambda(dim - keep + j) + shift - centroid;
      n2 += kept(j) * kept(j);
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
    if (n2 < 1e-28) {
      if (radius_sq > 1e-14) continue;  // flat support cannot carry purity
      for (int j = 0; j < keep; ++j) out(dim - keep + j) = centroid;
    } else {
      const double t = std::sqrt(std::max(radius_sq, 0.0) / n2);
      double min_kept = std::numeric_limits<double>::infinity();
      for (int j = 0; j < keep; ++j) {
        out(dim - keep + j) = centroid + t * kept(j);
        min_kept = std::min(min_kept, out(dim - keep + j));
      }
      if (min_kept < -1e-14) continue;
      for (int j = 0; j < keep; ++j)
        out(dim - keep + j) = std::max(out(dim - keep + j), 0.0);
    }
    return es.eigenvectors() * out.asDiagonal() * es.eigenvectors().adjoint();
  }
  return std::nullopt;
}

}  // namespace detail

// Best M_l1 found at fixed mixedness by random restarts of projected local
// ascent: additive steps along random imaginary directions, spectra rescaled
// back onto the purity slice, step halved whenever a candidate leaves the
// feasible set. budget = number of restarts, 200 steps each.
inline SearchResult max_imaginarity_at_mixedness(int dim, double mixedness,
                                                 int budget,
                                                 std::uint64_t seed) {
  if (dim < 2)
    throw WrongDimension("search needs dimension >= 2, got " +
                         std::to_string(dim));
  if (!(mixedness >= 0.0 && mixedness < 1.0))
    throw InvalidMixedness("mixedness must lie in [0, 1), got " +
                           detail::fmt_double(mixedness));
  if (budget < 1)
    throw InvalidMixedness("budget must be >= 1, got " +
                           std::to_string(budget));

  const double purity = 1.0 - (dim - 1.0) * mixedness / dim;
  const double bound = (dim - 1.0) * std::sqrt(1.0 - mixedness);
  constexpr int kStepsPerRestart = 200;

  DenseMatrix best;
  double best_value = -1.0;
  std::int64_t evals = 0;

  for (int restart = 0; restart < budget; ++restart) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
    const Eigen::VectorXd lambda =
        detail::sample_spectrum(dim, purity, rng);
    const DenseMatrix v = detail::haar_unitary(dim, rng);
    DenseMatrix rho = v * lambda.asDiagonal() * v.adjoint();
    double value = detail::off_diag_imag_l1(rho);
    ++evals;

    double step = 0.3;
    for (int it = 0; it < kStepsPerRestart; ++it) {
      const DenseMatrix dir = (it % 3 == 2)
                                  ? detail::symmetric_direction(dim, rng)
                                  : detail::imaginary_direction(dim, rng);
      bool improved = false;
      for (int halving = 0; halving < 6 && !improved; ++halving) {
        const double eps = step / static_cast<double>(1 << halving);
        for (double sign : {1.0, -1.0}) {
          const auto cand =
              detail::project_to_slice(rho + sign * eps * dir, purity);
          ++evals;
          if (!cand) continue;  // constraint violation, try a smaller step
          const double cand_value = detail::off_diag_imag_l1(*cand);
          if (cand_value > value) {
            rho = *cand;
            value = cand_value;
            step = std::min(0.5, eps * 1.5);
            improved = true;
            break;
          }
        }
      }
      if (!improved) step = std::max(1e-8, step * 0.5);
    }
    if (value > best_value) {
      best_value = value;
      best = rho;
    }
  }

  SearchResult result{DensityMatrix::validate(best), best_value, bound,
                      bound - best_value, evals, seed};
  return result;
}

// Exhaustive grid over the qubit sphere r1^2 + r2^2 + r3^2 = 1 - s:
// an independent brute-force check of the qubit trade-off ceiling.
inline SearchResult qubit_grid_oracle(double mixedness, int n) {
  if (!(mixedness >= 0.0 && mixedness < 1.0))
    throw InvalidMixedness("mixedness must lie in [0, 1), got " +
                           detail::fmt_double(mixedness));
  if (n < 10)
    throw GridOutOfRange("qubit grid oracle needs n >= 10, got " +
                         std::to_string(n));
  const double radius = std::sqrt(1.0 - mixedness);
  double best = -1.0;
  BlochVector best_r;
  for (int i = 0; i < n; ++i) {
    const double zeta = std::numbers::pi * i / (n - 1);
    const double sz = std::sin(zeta);
    const double cz = std::cos(zeta);
    for (int j = 0; j < n; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n;
      const BlochVector r{radius * sz * std::cos(phi),
                          radius * sz * std::sin(phi), radius * cz};
      const double value = std::abs(r.r2);
      if (value > best) {
        best = value;
        best_r = r;
      }
    }
  }
  return SearchResult{from_bloch(best_r), best, radius, radius - best,
                      static_cast<std::int64_t>(n) * n, 0};
}

// Minimum over a grid_n^3 phase grid of the max-entrywise distance between
// diag(e^{i theta}) rho_m diag(e^{-i theta}) and the first qutrit MIMS form,
// with the MCMS parameter p = 3|y| so the off-diagonal moduli match.
// Strictly positive: no incoherent unitary maps one family onto the other.
inline double qutrit_unitary_witness(double mixedness, int grid_n) {
  if (mixedness < threshold(3) - kFeasibilityTol)
    throw BelowThreshold("witness needs mixedness >= " +
                         detail::fmt_double(threshold(3)) + ", got " +
                         detail::fmt_double(mixedness));
  if (grid_n < 50)
    throw GridOutOfRange("witness grid must have >= 50 points per phase");
  const double y = mims_y(3, mixedness);
  const double p = 3.0 * y;
  // Only the three upper off-diagonal entries can differ: diagonals are
  // both exactly 1/3 and the lower triangle mirrors the upper by conjugation.
  // Entry (j,k), j<k, of U rho_m U^dag is (p/3) e^{i(theta_j - theta_k)} and
  // the target is -iy, so the distance depends only on the phase difference.
  std::vector<double> dist(static_cast<std::size_t>(grid_n));
  for (int m = 0; m < grid_n; ++m) {
    const double alpha = 2.0 * std::numbers::pi * m / grid_n;
    const Complex entry(p / 3.0 * std::cos(alpha), p / 3.0 * std::sin(alpha));
    dist[static_cast<std::size_t>(m)] = std::abs(entry - Complex(0.0, -y));
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_n; ++i)
    for (int j = 0; j < grid_n; ++j) {
      const double d01 = dist[static_cast<std::size_t>(
          ((i - j) % grid_n + grid_n) % grid_n)];
      for (int k = 0; k < grid_n; ++k) {
        const double d02 = dist[static_cast<std::size_t>(
            ((i - k) % grid_n + grid_n) % grid_n)];
        const double d12 = dist[static_cast<std::size_t>(
            ((j - k) % grid_n + grid_n) % grid_n)];
        const double worst = std::max(d01, std::max(d02, d12));
        if (worst < best) best = worst;
      }
    }
  return best;
}

}  // namespace imix
