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
// Constructors and closed-form spectral theory for maximally imaginary
// mixed states (MIMS) and the reference families they are compared against.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "imix/measures.hpp"
#include "imix/states.hpp"

namespace imix {

// Which triangle of the pattern carries -iy: Lower places -iy strictly above
// the diagonal (the canonical first form), Upper is its transpose.
enum class MimsVariant { Lower, Upper };

// Diagonal real orthogonal O = diag(signs), the transformation that generates
// the MIMS orbit without changing any measure. The leading sign is fixed to
// +1 to quotient out the global sign.
class SignMask {
 public:
  static SignMask identity(int dim) {
    check_dim(dim);
    return SignMask(std::vector<int>(static_cast<std::size_t>(dim), 1));
  }

  static SignMask from_signs(std::vector<int> signs) {
    check_dim(static_cast<int>(signs.size()));
    for (int s : signs)
      if (s != 1 && s != -1)
        throw InvalidMask("sign mask entries must be +1 or -1");
    if (signs.front() != 1)
      throw InvalidMask("sign mask must start with +1 (global sign is fixed)");
    return SignMask(std::move(signs));
  }

  // Parses "+--+" style strings.
  static SignMask from_string(std::string_view text) {
    std::vector<int> signs;
    signs.reserve(text.size());
    for (char c : text) {
      if (c == '+')
        signs.push_back(1);
      else if (c == '-')
        signs.push_back(-1);
      else
        throw InvalidMask(std::string("invalid sign mask character '") + c +
                          "' (expected '+' or '-')");
    }
    return from_signs(std::move(signs));
  }

  // Uniformly random mask with the leading entry fixed to +1.
  static SignMask random(int dim, Rng& rng) {
    check_dim(dim);
    std::vector<int> signs(static_cast<std::size_t>(dim), 1);
    for (int j = 1; j < dim; ++j) signs[j] = (rng.next_u64() & 1u) ? 1 : -1;
    return SignMask(std::move(signs));
  }

  int dim() const { return static_cast<int>(signs_.size()); }
  int sign(int j) const { return signs_[static_cast<std::size_t>(j)]; }

  std::string to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
    return out;
  }

 private:
  explicit SignMask(std::vector<int> signs) : signs_(std::move(signs)) {}

  static void check_dim(int dim) {
    if (dim < 2)
      throw WrongDimension("sign mask needs dimension >= 2, got " +
                           std::to_string(dim));
  }

  std::vector<int> signs_;
};

// Mixedness threshold below which the uniform-|y| pattern stops being
// positive semidefinite: 2 cos(pi/d) / (1 + cos(pi/d)) = 1 - tan^2(pi/2d).
inline double threshold(int dim) {
  if (dim < 2)
    throw WrongDimension("threshold needs dimension >= 2, got " +
                         std::to_string(dim));
  const double c = std::cos(std::numbers::pi / dim);
  return 2.0 * c / (1.0 + c);
}

// Off-diagonal magnitude for mixedness s: |y| = sqrt(1-s)/d.
inline double mims_y(int dim, double mixedness) {
  return std::sqrt(1.0 - mixedness) / dim;
}

// (dimension, mixedness, derived off-diagonal magnitude, variant, mask).
// Mixedness is the primary input; y is always derived from it.
struct MimsSpec {
  int dim;
  double mixedness;
  double y_mag;
  MimsVariant variant;
  SignMask mask;

  static MimsSpec create(int dim, double mixedness,
                         MimsVariant variant = MimsVariant::Lower) {
    return create(dim, mixedness, variant, SignMask::identity(dim));
  }

  static MimsSpec create(int dim, double mixedness, MimsVariant variant,
                         SignMask mask) {
    if (dim < 2)
      throw WrongDimension("MIMS needs dimension >= 2, got " +
                           std::to_string(dim));
    if (!(mixedness >= 0.0 && mixedness < 1.0))
      throw InvalidMixedness("mixedness must lie in [0, 1), got " +
                             detail::fmt_double(mixedness));
    if (mask.dim() != dim)
      throw DimensionMismatch("sign mask length " +
                              std::to_string(mask.dim()) +
                              " does not match dimension " +
                              std::to_string(dim));
    return MimsSpec{dim, mixedness, mims_y(dim, mixedness), variant,
                    std::move(mask)};
  }

  bool feasible() const {
    return mixedness >= threshold(dim) - kFeasibilityTol;
  }
};

namespace detail {

// Diagonal 1/d, off-diagonal +-iy with -iy strictly above the diagonal for
// Lower (and the transpose for Upper), conjugated by the mask.
inline DenseMatrix mims_pattern(int dim, double y, MimsVariant variant,
                                const SignMask& mask) {
  const double upper_im = variant == MimsVariant::Lower ? -y : y;
  DenseMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      if (j == k) {
        m(j, k) = Complex(1.0 / dim, 0.0);
      } else {
        const double im = j < k ? upper_im : -upper_im;
        m(j, k) = Complex(0.0, mask.sign(j) * mask.sign(k) * im);
      }
    }
  }
  return m;
}

}  // namespace detail

// O rho O^T with O = diag(mask); spectrum and all measures are unchanged.
inline DensityMatrix conjugate_by_sign_mask(const DensityMatrix& rho,
                                            const SignMask& mask) {
  if (mask.dim() != rho.dim())
    throw DimensionMismatch("sign mask length " + std::to_string(mask.dim()) +
                            " does not match state dimension " +
                            std::to_string(rho.dim()));
  const int d = rho.dim();
  DenseMatrix m(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      m(j, k) = static_cast<double>(mask.sign(j) * mask.sign(k)) * rho(j, k);
  return DensityMatrix::validate(m);
}

// Qubit MIMS: (I + p sigma_2)/2 up to variant and mask, p = sqrt(1-s).
// Feasible for every s in [0, 1).
inline DensityMatrix qubit_mims(double mixedness,
                                MimsVariant variant = MimsVariant::Lower,
                                const SignMask& mask = SignMask::identity(2)) {
  if (!(mixedness >= 0.0 && mixedness < 1.0))
    throw InvalidMixedness("mixedness must lie in [0, 1), got " +
                           detail::fmt_double(mixedness));
  if (mask.dim() != 2)
    throw DimensionMismatch("qubit sign mask must have length 2");
  return DensityMatrix::validate(
      detail::mims_pattern(2, mims_y(2, mixedness), variant, mask));
}

// General-d MIMS of the uniform-|y| class. Requires s >= threshold(d).
inline DensityMatrix ddim_mims(const MimsSpec& spec) {
  if (!spec.feasible())
    throw BelowThreshold(
        "mixedness " + detail::fmt_double(spec.mixedness) +
        " is below the MIMS feasibility threshold " +
        detail::fmt_double(threshold(spec.dim)) + " for dimension " +
        std::to_string(spec.dim) + "; the maximum imaginarity is unattainable");
  return DensityMatrix::validate(detail::mims_pattern(
      spec.dim, spec.y_mag, spec.variant, spec.mask));
}

// The eight qutrit MIMS forms, indexed in the conventional printed order:
// k = 1, 2 are the two base variants; 3..5 conjugate the first by
// diag(1,1,-1), diag(1,-1,1), diag(1,-1,-1); 6..8 do the same to the second.
inline DensityMatrix qutrit_mims(double mixedness, int k) {
  if (k < 1 || k > 8)
    throw UnknownKind("qutrit MIMS index must be in 1..8, got " +
                      std::to_string(k));
  static const char* kMasks[3] = {"++-", "+-+", "+--"};
  const MimsVariant variant =
      (k == 1 || k == 3 || k == 4 || k == 5) ? MimsVariant::Lower
                                             : MimsVariant::Upper;
  const SignMask mask = (k <= 2) ? SignMask::identity(3)
                                 : SignMask::from_string(
                                       kMasks[(k <= 5 ? k - 3 : k - 6)]);
  return ddim_mims(MimsSpec::create(3, mixedness, variant, mask));
}

// Eigenvalues 1/d - y cot(theta_k/2), theta_k = (2k-1) pi / d, ascending.
inline HermitianSpectrum mims_spectrum_closed_form(int dim, double y) {
  if (dim < 2)
    throw WrongDimension("closed-form spectrum needs dimension >= 2, got " +
                         std::to_string(dim));
  Eigen::VectorXd values(dim);
  for (int k = 1; k <= dim; ++k) {
    const double half_theta = (2.0 * k - 1.0) * std::numbers::pi / (2.0 * dim);
    values(k - 1) = 1.0 / dim - y / std::tan(half_theta);
  }
  std::sort(values.begin(), values.end());
  return HermitianSpectrum{std::move(values)};
}

// Maximally coherent mixed state: diagonal 1/d, all off-diagonals p/d (real).
inline DensityMatrix mcms(int dim, double p) {
  if (dim < 2)
    throw WrongDimension("mcms needs dimension >= 2, got " +
                         std::to_string(dim));
  if (!(p > 0.0 && p <= 1.0))
    throw InvalidP("mcms parameter must lie in (0, 1], got " +
                   detail::fmt_double(p));
  DenseMatrix m = DenseMatrix::Constant(dim, dim, Complex(p / dim, 0.0));
  for (int j = 0; j < dim; ++j) m(j, j) = Complex(1.0 / dim, 0.0);
  return DensityMatrix::validate(m);
}

// p |+><+| + (1-p)/d I with |+> = (|0> + i|1>)/sqrt(2) embedded in
// dimension d. Saturates the trade-off only at d = 2.
inline DensityMatrix noisy_plus(int dim, double p) {
  if (dim < 2)
    throw WrongDimension("noisy_plus needs dimension >= 2, got " +
                         std::to_string(dim));
  if (!(p > 0.0 && p <= 1.0))
    throw InvalidP("noisy_plus parameter must lie in (0, 1], got " +
                   detail::fmt_double(p));
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  const double q = (1.0 - p) / dim;
  for (int j = 0; j < dim; ++j) m(j, j) = Complex(q, 0.0);
  m(0, 0) += Complex(0.5 * p, 0.0);
  m(1, 1) += Complex(0.5 * p, 0.0);
  m(0, 1) = Complex(0.0, -0.5 * p);
  m(1, 0) = Complex(0.0, 0.5 * p);
  return DensityMatrix::validate(m);
}

}  // namespace imix
