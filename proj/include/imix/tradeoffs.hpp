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
// The four imaginarity-mixedness trade-off functionals and their
// verification report. Slack convention: slack = bound - value, so valid
// states always give slack >= 0 (up to solver noise).

#pragma once

#include <cmath>

#include "imix/measures.hpp"
#include "imix/states.hpp"

namespace imix {

struct TradeoffReport {
  double f_l1 = 0.0;          // M_l1^2/(d-1)^2 + S_l, bound 1
  double msi = 0.0;           // f_l1 + I_+, bound 1
  double comp_1norm = 0.0;    // d/(2(d-1)) M_1 + S_1, bound 1
  double comp_entropy = 0.0;  // M_r + S, bound ln d
  double slack_f_l1 = 0.0;
  double slack_msi = 0.0;
  double slack_comp_1norm = 0.0;
  double slack_comp_entropy = 0.0;
  bool is_mims = false;  // f_l1 saturated within the requested tolerance
};

// M_l1(rho)^2 / (d-1)^2 + S_l(rho). For qubits this is 1 - r1^2 - r3^2.
inline double f_l1(const DensityMatrix& rho) {
  const double m = m_l1(rho);
  const double d = rho.dim();
  return m * m / ((d - 1.0) * (d - 1.0)) + s_linear(rho);
}

// f_l1 + I_+; equals 1 exactly when the |Im rho_jk| are all equal (j < k).
inline double msi(const DensityMatrix& rho) {
  return f_l1(rho) + i_plus(rho);
}

// d/(2(d-1)) M_1(rho) + S_1(rho); saturates when Re(rho) = I/d.
inline double comp_1norm(const DensityMatrix& rho) {
  const double d = rho.dim();
  return d / (2.0 * (d - 1.0)) * m_1(rho) + s_1(rho);
}

// M_r(rho) + S(rho) = S(Re(rho)); bounded by ln d, attained iff
// Re(rho) = I/d.
inline double comp_entropy(const DensityMatrix& rho) {
  return m_r(rho) + s_von_neumann(rho);
}

inline TradeoffReport verify(const DensityMatrix& rho, double tol) {
  TradeoffReport r;
  r.f_l1 = f_l1(rho);
  r.msi = msi(rho);
  r.comp_1norm = comp_1norm(rho);
  r.comp_entropy = comp_entropy(rho);
  r.slack_f_l1 = 1.0 - r.f_l1;
  r.slack_msi = 1.0 - r.msi;
  r.slack_comp_1norm = 1.0 - r.comp_1norm;
  r.slack_comp_entropy = std::log(static_cast<double>(rho.dim())) -
                         r.comp_entropy;
  r.is_mims = r.slack_f_l1 <= tol;
  return r;
}

}  // namespace imix
