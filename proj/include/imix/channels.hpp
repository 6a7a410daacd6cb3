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
// Kraus-channel machinery and the closed-form evolution of the qubit
// trade-off functional F under the four named Markovian channels.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imix/rng.hpp"
#include "imix/states.hpp"
#include "imix/tradeoffs.hpp"

namespace imix {

enum class ChannelKind {
  BitFlip,
  PhaseDamping,
  Depolarizing,
  AmplitudeDamping,
  Custom,
};

inline const char* kind_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bit_flip";
    case ChannelKind::PhaseDamping: return "phase_damping";
    case ChannelKind::Depolarizing: return "depolarizing";
    case ChannelKind::AmplitudeDamping: return "amplitude_damping";
    case ChannelKind::Custom: return "custom";
  }
  return "unknown";
}

// A quantum channel in Kraus form. Completeness sum K_j^dagger K_j = I is
// certified at construction.
class KrausChannel {
 public:
  static KrausChannel custom(std::vector<DenseMatrix> kraus) {
    return KrausChannel(ChannelKind::Custom, std::nullopt, std::move(kraus));
  }

  int dim() const { return dim_; }
  const std::vector<DenseMatrix>& kraus() const { return kraus_; }
  ChannelKind kind() const { return kind_; }
  std::optional<double> parameter() const { return p_; }

 private:
  friend KrausChannel bit_flip(double);
  friend KrausChannel phase_damping(double);
  friend KrausChannel depolarizing(double);
  friend KrausChannel amplitude_damping(double);
  friend KrausChannel random_real_channel(int, int, std::uint64_t);

  KrausChannel(ChannelKind kind, std::optional<double> p,
               std::vector<DenseMatrix> kraus)
      : kind_(kind), p_(p), kraus_(std::move(kraus)) {
    if (kraus_.empty())
      throw IncompleteKraus("channel needs at least one Kraus operator");
    dim_ = static_cast<int>(kraus_.front().rows());
    for (const auto& k : kraus_)
      if (k.rows() != dim_ || k.cols() != dim_)
        throw DimensionMismatch("Kraus operators must all be " +
                                std::to_string(dim_) + "x" +
                                std::to_string(dim_));
    DenseMatrix sum = DenseMatrix::Zero(dim_, dim_);
    for (const auto& k : kraus_) sum += k.adjoint() * k;
    const double dev =
        (sum - DenseMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
    if (dev > kKrausTol)
      throw IncompleteKraus("Kraus completeness violated: max |sum - I| = " +
                            detail::fmt_double(dev));
  }

  ChannelKind kind_;
  std::optional<double> p_;
  std::vector<DenseMatrix> kraus_;
  int dim_ = 0;
};

namespace detail {

inline void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidP("channel parameter must lie in [0, 1], got " +
                   fmt_double(p));
}

}  // namespace detail

// K0 = sqrt(p) I, K1 = sqrt(1-p) sigma_1.
inline KrausChannel bit_flip(double p) {
  detail::check_p(p);
  DenseMatrix k0 = std::sqrt(p) * DenseMatrix::Identity(2, 2);
  DenseMatrix k1(2, 2);
  k1 << 0.0, std::sqrt(1.0 - p), std::sqrt(1.0 - p), 0.0;
  return KrausChannel(ChannelKind::BitFlip, p, {std::move(k0), std::move(k1)});
}

// K0 = sqrt(p) I, K1 = sqrt(1-p) |0><0|, K2 = sqrt(1-p) |1><1|.
inline KrausChannel phase_damping(double p) {
  detail::check_p(p);
  DenseMatrix k0 = std::sqrt(p) * DenseMatrix::Identity(2, 2);
  DenseMatrix k1 = DenseMatrix::Zero(2, 2);
  k1(0, 0) = std::sqrt(1.0 - p);
  DenseMatrix k2 = DenseMatrix::Zero(2, 2);
  k2(1, 1) = std::sqrt(1.0 - p);
  return KrausChannel(ChannelKind::PhaseDamping, p,
                      {std::move(k0), std::move(k1), std::move(k2)});
}

// Depolarizing map rho -> (p/2) I + (1-p) rho, carried as the real Kraus
// decomposition {sqrt(1-p) I} + {sqrt(p/2) |i><j|}. An equivalent Pauli
// decomposition exists (see depolarizing_pauli_kraus) but contains sigma_2,
// whose entries are imaginary; this one keeps the channel a real operation.
inline KrausChannel depolarizing(double p) {
  detail::check_p(p);
  std::vector<DenseMatrix> kraus;
  kraus.push_back(std::sqrt(1.0 - p) * DenseMatrix::Identity(2, 2));
  const double w = std::sqrt(0.5 * p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      DenseMatrix k = DenseMatrix::Zero(2, 2);
      k(i, j) = w;
      kraus.push_back(std::move(k));
    }
  return KrausChannel(ChannelKind::Depolarizing, p, std::move(kraus));
}

// The textbook 4-element Pauli decomposition of the same map:
// {sqrt(1-3p/4) I, sqrt(p)/2 sigma_1, sqrt(p)/2 sigma_2, sqrt(p)/2 sigma_3}.
// Note sigma_2 makes this set complex-valued.
inline std::vector<DenseMatrix> depolarizing_pauli_kraus(double p) {
  detail::check_p(p);
  const double w = 0.5 * std::sqrt(p);
  DenseMatrix k0 = std::sqrt(1.0 - 0.75 * p) * DenseMatrix::Identity(2, 2);
  DenseMatrix k1(2, 2), k2(2, 2), k3(2, 2);
  k1 << 0.0, w, w, 0.0;
  k2 << Complex(0, 0), Complex(0, -w), Complex(0, w), Complex(0, 0);
  k3 << w, 0.0, 0.0, -w;
  return {std::move(k0), std::move(k1), std::move(k2), std::move(k3)};
}

// Affine evaluation of the depolarizing map, the reference path the closed
// forms and monotonicity statements are checked against.
inline DensityMatrix depolarizing_affine(double p, const DensityMatrix& rho) {
  detail::check_p(p);
  if (rho.dim() != 2)
    throw WrongDimension("depolarizing_affine expects a qubit state");
  DenseMatrix m = 0.5 * p * DenseMatrix::Identity(2, 2) +
                  (1.0 - p) * rho.matrix();
  return DensityMatrix::validate(m);
}

// K0 = |0><0| + sqrt(1-p) |1><1|, K1 = sqrt(p) |0><1|.
inline KrausChannel amplitude_damping(double p) {
  detail::check_p(p);
  DenseMatrix k0 = DenseMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  DenseMatrix k1 = DenseMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(p);
  return KrausChannel(ChannelKind::AmplitudeDamping, p,
                      {std::move(k0), std::move(k1)});
}

// True iff every entry of every Kraus operator is real, i.e. the channel is
// a real (imaginarity-free) operation.
inline bool is_real(const KrausChannel& ch) {
  for (const auto& k : ch.kraus())
    if (k.imag().cwiseAbs().maxCoeff() > kRealEntryTol) return false;
  return true;
}

// Lambda(rho) = sum K_j rho K_j^dagger.
inline DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim())
    throw DimensionMismatch("channel dimension " + std::to_string(ch.dim()) +
                            " does not match state dimension " +
                            std::to_string(rho.dim()));
  DenseMatrix out = DenseMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix::validate(out);
}

// Closed form of F(channel(rho)) for a qubit with Bloch vector r.
inline double f_out_closed(ChannelKind kind, double p, const BlochVector& r) {
  detail::check_p(p);
  if (r.norm_sq() > 1.0 + kBlochNormTol)
    throw BlochNormExceeded("Bloch norm exceeds 1: |r|^2 = " +
                            detail::fmt_double(r.norm_sq()));
  switch (kind) {
    case ChannelKind::BitFlip:
      return 1.0 - r.r1 * r.r1 - (2.0 * p - 1.0) * (2.0 * p - 1.0) * r.r3 * r.r3;
    case ChannelKind::PhaseDamping:
      return 1.0 - p * p * r.r1 * r.r1 - r.r3 * r.r3;
    case ChannelKind::Depolarizing:
      return 1.0 - (1.0 - p) * (1.0 - p) * (r.r1 * r.r1 + r.r3 * r.r3);
    case ChannelKind::AmplitudeDamping: {
      const double z = p + (1.0 - p) * r.r3;
      return 1.0 - (1.0 - p) * r.r1 * r.r1 - z * z;
    }
    case ChannelKind::Custom:
      break;
  }
  throw UnknownKind("no closed form for this channel kind");
}

// One point of a channel sweep over the Bloch family
// r(theta) = (sin(theta)/sqrt2, sin(theta)/sqrt2, cos(theta)).
struct SweepRow {
  double p = 0.0;
  double theta = 0.0;
  double f_in = 0.0;
  double f_out_closed = 0.0;
  double f_out_numeric = 0.0;
};

inline BlochVector sweep_bloch(double theta) {
  const double s = std::sin(theta) / std::numbers::sqrt2;
  return BlochVector{s, s, std::cos(theta)};
}

namespace detail {

inline KrausChannel make_channel(ChannelKind kind, double p) {
  switch (kind) {
    case ChannelKind::BitFlip: return bit_flip(p);
    case ChannelKind::PhaseDamping: return phase_damping(p);
    case ChannelKind::Depolarizing: return depolarizing(p);
    case ChannelKind::AmplitudeDamping: return amplitude_damping(p);
    case ChannelKind::Custom: break;
  }
  throw UnknownKind("cannot build a parametric channel of this kind");
}

}  // namespace detail

// Sweep of F before/after a named channel over (p, theta) grids. f_in is
// (1/2) sin^2 theta; the closed output column uses the theta polynomial for
// amplitude damping and the Bloch closed form otherwise; the numeric column
// always goes through the Kraus representation.
inline std::vector<SweepRow> sweep(ChannelKind kind,
                                   const std::vector<double>& p_grid,
                                   const std::vector<double>& theta_grid) {
  for (double p : p_grid)
    if (!(p >= 0.0 && p <= 1.0))
      throw GridOutOfRange("channel parameter grid must lie in [0, 1], got " +
                           detail::fmt_double(p));
  for (double theta : theta_grid)
    if (!(theta >= 0.0 && theta <= std::numbers::pi + 1e-12))
      throw GridOutOfRange("theta grid must lie in [0, pi], got " +
                           detail::fmt_double(theta));
  std::vector<SweepRow> rows;
  rows.reserve(p_grid.size() * theta_grid.size());
  for (double p : p_grid) {
    const KrausChannel ch = detail::make_channel(kind, p);
    for (double theta : theta_grid) {
      const double st = std::sin(theta);
      const double ct = std::cos(theta);
      const BlochVector r = sweep_bloch(theta);
      SweepRow row;
      row.p = p;
      row.theta = theta;
      row.f_in = 0.5 * st * st;
      if (kind == ChannelKind::AmplitudeDamping) {
        row.f_out_closed = (1.0 - p) * ((p - 0.5) * ct * ct - 2.0 * p * ct +
                                        p + 0.5);
      } else {
        row.f_out_closed = f_out_closed(kind, p, r);
      }
      row.f_out_numeric = f_l1(apply(ch, from_bloch(r)));
      rows.push_back(row);
    }
  }
  return rows;
}

inline std::vector<SweepRow> sweep_ad(const std::vector<double>& p_grid,
                                      const std::vector<double>& theta_grid) {
  return sweep(ChannelKind::AmplitudeDamping, p_grid, theta_grid);
}

// Random real channel: QR-orthonormalize the vertical stack of n_kraus
// random real d x d Gaussian blocks; the d orthonormal columns split back
// into a complete real Kraus set.
inline KrausChannel random_real_channel(int dim, int n_kraus,
                                        std::uint64_t seed) {
  if (dim < 2)
    throw WrongDimension("random_real_channel needs dimension >= 2, got " +
                         std::to_string(dim));
  if (n_kraus < 1)
    throw WrongDimension("random_real_channel needs n_kraus >= 1, got " +
                         std::to_string(n_kraus));
  Rng rng(seed);
  const Eigen::MatrixXd g = rng.gaussian_matrix(n_kraus * dim, dim);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(n_kraus * dim, dim);
  std::vector<DenseMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(n_kraus));
  for (int j = 0; j < n_kraus; ++j)
    kraus.push_back(q.block(j * dim, 0, dim, dim).cast<Complex>());
  return KrausChannel(ChannelKind::Custom, std::nullopt, std::move(kraus));
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return grid;
}

}  // namespace imix
