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
// Maintenance tool: recomputes the pinned oracle constants and writes
// fixtures/pinned.json. The test suites treat that file as frozen ground
// truth, so regenerate it only when the oracle definitions change.

#include <fstream>
#include <iostream>
#include <vector>

#include "imix/imix.hpp"

namespace {

constexpr std::uint64_t kPuritySeed = 424242;
constexpr int kPuritySamples = 100000;
constexpr int kWitnessGrid = 200;
constexpr std::uint64_t kGapSeed = 20260810;
constexpr int kGapBudget = 24;

}  // namespace

int main(int argc, char** argv) {
  const std::string out_path = argc > 1 ? argv[1] : "fixtures/pinned.json";

  imix::Json j;

  {
    double total = 0.0;
    for (int i = 0; i < kPuritySamples; ++i) {
      const auto rho =
          imix::random_state(2, imix::derive_seed(kPuritySeed, i));
      total += rho.matrix().squaredNorm();
    }
    const double mean = total / kPuritySamples;
    j["hs_mean_purity"] = {{"dim", 2},
                           {"samples", kPuritySamples},
                           {"seed", kPuritySeed},
                           {"value", mean}};
    std::cout << "hs_mean_purity = " << imix::detail::fmt_double(mean) << "\n";
  }

  {
    const double s = 2.0 / 3.0;
    const double w = imix::qutrit_unitary_witness(s, kWitnessGrid);
    j["qutrit_witness"] = {{"s", s}, {"grid_n", kWitnessGrid}, {"value", w}};
    std::cout << "qutrit_witness = " << imix::detail::fmt_double(w) << "\n";
  }

  {
    std::vector<double> svalues{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    std::vector<double> gaps;
    std::vector<double> best;
    for (double s : svalues) {
      const auto r =
          imix::max_imaginarity_at_mixedness(3, s, kGapBudget, kGapSeed);
      gaps.push_back(r.gap);
      best.push_back(r.best_m_l1);
      std::cout << "d=3 s=" << s << " best=" << imix::detail::fmt_double(
                       r.best_m_l1)
                << " gap=" << imix::detail::fmt_double(r.gap) << "\n";
    }
    j["qutrit_infeasible_gaps"] = {{"dim", 3},
                                   {"seed", kGapSeed},
                                   {"budget", kGapBudget},
                                   {"svalues", svalues},
                                   {"best_m_l1", best},
                                   {"gaps", gaps}};
  }

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 1;
  }
  out << j.dump(2) << "\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}
