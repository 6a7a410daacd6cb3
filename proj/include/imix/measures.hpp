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
// Imaginarity, coherence and mixedness functionals. Entropies are in nats.

#pragma once

#include <cmath>

#include "imix/states.hpp"

namespace imix {

struct MeasureReport {
  double m_l1 = 0.0;
  double m_1 = 0.0;
  double m_r = 0.0;
  double c_l1 = 0.0;
  double s_lin = 0.0;
  double s_vn = 0.0;
  double s_1 = 0.0;
  double i_plus = 0.0;
};

// l1 norm of imaginarity: sum_{j!=k} |Im rho_jk|.
inline double m_l1(const DensityMatrix& rho) {
  const int d = rho.dim();
  double sum = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      if (j != k) sum += std::abs(rho(j, k).imag());
  return sum;
}

// 1-norm of imaginarity: half the trace norm of rho - rho^T.
inline double m_1(const DensityMatrix& rho) {
  return 0.5 * trace_norm(rho.matrix() - rho.matrix().transpose().eval());
}

// l1 norm of coherence: sum_{j!=k} |rho_jk|.
inline double c_l1(const DensityMatrix& rho) {
  const int d = rho.dim();
  double sum = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      if (j != k) sum += std::abs(rho(j, k));
  return sum;
}

// Normalized linear entropy: d/(d-1) (1 - Tr rho^2), in [0, 1].
inline double s_linear(const DensityMatrix& rho) {
  const double d = rho.dim();
  const double purity = rho.matrix().squaredNorm();  // Tr rho^2, Hermitian
  return d / (d - 1.0) * (1.0 - purity);
}

// von Neumann entropy -sum lambda ln lambda with 0 ln 0 := 0, in nats.
// Eigenvalues are clamped to [0, 1] before the log to absorb solver noise.
inline double s_von_neumann(const DensityMatrix& rho) {
  const HermitianSpectrum sp = spectrum(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < sp.eigenvalues.size(); ++i) {
    double lambda = sp.eigenvalues(i);
    lambda = std::min(1.0, std::max(0.0, lambda));
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

// Relative entropy of imaginarity: S(Re(rho)) - S(rho).
inline double m_r(const DensityMatrix& rho) {
  return s_von_neumann(real_part(rho)) - s_von_neumann(rho);
}

// 1-norm of mixedness: 1 - d/(2(d-1)) ||rho - I/d||_1, in [0, 1].
inline double s_1(const DensityMatrix& rho) {
  const int d = rho.dim();
  const DenseMatrix centered =
      rho.matrix() - DenseMatrix::Identity(d, d) / static_cast<double>(d);
  return 1.0 - d / (2.0 * (d - 1.0)) * trace_norm(centered);
}

// Normalized BZ-invariant term d/(d-1) (Tr[Re(rho)^2] - 1/d); zero exactly
// when Re(rho) = I/d. Tr[Re(rho)^2] equals the entrywise sum of squares of
// the (symmetric) real part.
inline double i_plus(const DensityMatrix& rho) {
  const double d = rho.dim();
  const Eigen::MatrixXd re = rho.matrix().real();
  return d / (d - 1.0) * (re.squaredNorm() - 1.0 / d);
}

// All eight functionals in one pass.
inline MeasureReport report(const DensityMatrix& rho) {
  MeasureReport r;
  r.m_l1 = m_l1(rho);
  r.m_1 = m_1(rho);
  r.m_r = m_r(rho);
  r.c_l1 = c_l1(rho);
  r.s_lin = s_linear(rho);
  r.s_vn = s_von_neumann(rho);
  r.s_1 = s_1(rho);
  r.i_plus = i_plus(rho);
  return r;
}

}  // namespace imix
