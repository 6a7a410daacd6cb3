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
// Density-matrix representation: validation, Bloch maps, Hermitian spectra,
// trace norm and Hilbert-Schmidt random sampling.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

#include "imix/errors.hpp"
#include "imix/rng.hpp"

namespace imix {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

// Invariant tolerances. The underlying theory is exact; these absorb
// eigensolver round-off and decimal-JSON round trips at d <= 64.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;  // smallest eigenvalue >= -kPsdTol
inline constexpr double kBlochNormTol = 1e-12;
inline constexpr double kFeasibilityTol = 1e-12;
inline constexpr double kKrausTol = 1e-10;
inline constexpr double kRealEntryTol = 1e-14;

// Real 3-vector (r1, r2, r3) parameterizing qubit states.
struct BlochVector {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  double norm_sq() const { return r1 * r1 + r2 * r2 + r3 * r3; }
  double norm() const { return std::sqrt(norm_sq()); }
};

// Real eigenvalues of a Hermitian matrix, sorted ascending.
struct HermitianSpectrum {
  Eigen::VectorXd eigenvalues;

  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }
  double sum() const { return eigenvalues.sum(); }
};

// d x d complex matrix certified Hermitian, unit trace and positive
// semidefinite. Immutable after construction; every constructor in the
// library funnels through validate().
class DensityMatrix {
 public:
  // Certifies all three invariants. Hermitian asymmetry up to kHermitianTol
  // is removed by (m + m^dagger)/2; larger deviations are rejected.
  static DensityMatrix validate(const DenseMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 2)
      throw NotSquare("matrix is not a square array of dimension >= 2 (" +
                      std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ")");
    const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > kHermitianTol)
      throw NotHermitian("not Hermitian: max |m - m^dagger| = " +
                         detail::fmt_double(herm_dev) + " exceeds " +
                         detail::fmt_double(kHermitianTol));
    DenseMatrix sym = 0.5 * (m + m.adjoint());
    const double trace_dev = std::abs(sym.trace() - Complex(1.0, 0.0));
    if (trace_dev > kTraceTol)
      throw TraceNotOne("trace is not 1: |Tr - 1| = " +
                        detail::fmt_double(trace_dev) + " exceeds " +
                        detail::fmt_double(kTraceTol));
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(sym, Eigen::EigenvaluesOnly);
    const double lambda_min = es.eigenvalues()(0);
    if (lambda_min < -kPsdTol)
      throw NotPsd("not positive semidefinite: smallest eigenvalue " +
                   detail::fmt_double(lambda_min) + " is below -" +
                   detail::fmt_double(kPsdTol));
    return DensityMatrix(std::move(sym));
  }

  int dim() const { return static_cast<int>(mat_.rows()); }
  const DenseMatrix& matrix() const { return mat_; }
  Complex operator()(Eigen::Index j, Eigen::Index k) const {
    return mat_(j, k);
  }

 private:
  explicit DensityMatrix(DenseMatrix m) : mat_(std::move(m)) {}

  DenseMatrix mat_;
};

// rho = (I + r . sigma) / 2.
inline DensityMatrix from_bloch(const BlochVector& r) {
  if (r.norm_sq() > 1.0 + kBlochNormTol)
    throw BlochNormExceeded("Bloch norm exceeds 1: |r|^2 = " +
                            detail::fmt_double(r.norm_sq()));
  DenseMatrix m(2, 2);
  m(0, 0) = Complex(0.5 + 0.5 * r.r3, 0.0);
  m(1, 1) = Complex(0.5 - 0.5 * r.r3, 0.0);
  m(0, 1) = Complex(0.5 * r.r1, -0.5 * r.r2);
  m(1, 0) = std::conj(m(0, 1));
  return DensityMatrix::validate(m);
}

// r_k = Tr(rho sigma_k). Exact inverse of from_bloch: halves and doubles are
// exact, and the diagonal difference reproduces r3 for the grid-aligned
// doubles produced by Rng::uniform.
inline BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw WrongDimension("to_bloch expects a qubit state, got dimension " +
                         std::to_string(rho.dim()));
  const Complex off = rho(0, 1);
  return BlochVector{2.0 * off.real(), -2.0 * off.imag(),
                     rho(0, 0).real() - rho(1, 1).real()};
}

// Dedicated Hermitian eigenvalue path; never a general complex solver.
inline HermitianSpectrum spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(rho.matrix(),
                                                Eigen::EigenvaluesOnly);
  return HermitianSpectrum{es.eigenvalues()};
}

// Sum of absolute eigenvalues of a Hermitian matrix.
inline double trace_norm(const DenseMatrix& a) {
  if (a.rows() != a.cols())
    throw NotSquare("trace_norm expects a square matrix");
  const double herm_dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol)
    throw NotHermitian("trace_norm input not Hermitian: max deviation " +
                       detail::fmt_double(herm_dev));
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

// Re(rho) = (rho + rho^T)/2, itself a valid state.
inline DensityMatrix real_part(const DensityMatrix& rho) {
  return DensityMatrix::validate(rho.matrix().real().cast<Complex>());
}

// Hilbert-Schmidt distributed state: G G^dagger / Tr(G G^dagger) with G a
// d x d Ginibre matrix. Bit-reproducible for a given seed.
inline DensityMatrix random_state(int dim, std::uint64_t seed) {
  if (dim < 2)
    throw WrongDimension("random_state needs dimension >= 2, got " +
                         std::to_string(dim));
  Rng rng(seed);
  const DenseMatrix g = rng.ginibre(dim);
  DenseMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::validate(rho);
}

}  // namespace imix
