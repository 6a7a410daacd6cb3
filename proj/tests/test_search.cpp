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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "imix/imix.hpp"
#include "test_support.hpp"

using namespace imix;
using Catch::Approx;

TEST_CASE("qubit grid oracle converges to the trade-off ceiling") {
  SECTION("pure states reach m_l1 = 1") {
    const auto r = qubit_grid_oracle(0.0, 400);
    REQUIRE(r.best_m_l1 >= 0.99999);
    REQUIRE(r.bound == 1.0);
  }
  SECTION("s = 0.75 reaches sqrt(1-s) = 0.5 within 1e-4") {
    const auto r = qubit_grid_oracle(0.75, 400);
    REQUIRE(std::abs(r.best_m_l1 - 0.5) <= 1e-4);
    REQUIRE(r.gap >= 0.0);
  }
  SECTION("the sphere shrinks to a point as s -> 1") {
    const auto r = qubit_grid_oracle(1.0 - 1e-10, 100);
    REQUIRE(r.best_m_l1 <= 2e-5);
  }
  SECTION("preconditions") {
    REQUIRE_THROWS_AS(qubit_grid_oracle(1.0, 100), InvalidMixedness);
    REQUIRE_THROWS_AS(qubit_grid_oracle(0.5, 5), GridOutOfRange);
  }
}

TEST_CASE("random-restart ascent attains the bound where it is attainable") {
  SECTION("d = 2, s = 0.5") {
    const auto r = max_imaginarity_at_mixedness(2, 0.5, 32, 7);
    REQUIRE(r.gap <= 1e-4);
    REQUIRE(r.gap >= -1e-9);
    REQUIRE(r.bound == Approx(std::sqrt(0.5)).margin(1e-15));
  }
  SECTION("d = 3, s = 0.8") {
    const auto r = max_imaginarity_at_mixedness(3, 0.8, 32, 7);
    REQUIRE(r.gap <= 1e-4);
    REQUIRE(r.gap >= -1e-9);
  }
  SECTION("the qubit ascent matches the brute-force grid oracle") {
    const auto ascent = max_imaginarity_at_mixedness(2, 0.5, 16, 3);
    const auto grid = qubit_grid_oracle(0.5, 400);
    REQUIRE(std::abs(ascent.best_m_l1 - grid.best_m_l1) <= 1e-4);
  }
  SECTION("deterministic per seed") {
    const auto a = max_imaginarity_at_mixedness(3, 0.75, 8, 99);
    const auto b = max_imaginarity_at_mixedness(3, 0.75, 8, 99);
    REQUIRE(a.best_m_l1 == b.best_m_l1);
    REQUIRE(a.evals == b.evals);
    REQUIRE((a.best_state.matrix() - b.best_state.matrix())
                .cwiseAbs()
                .maxCoeff() == 0.0);
  }
  SECTION("preconditions") {
    REQUIRE_THROWS_AS(max_imaginarity_at_mixedness(1, 0.5, 8, 1),
                      WrongDimension);
    REQUIRE_THROWS_AS(max_imaginarity_at_mixedness(3, 1.0, 8, 1),
                      InvalidMixedness);
    REQUIRE_THROWS_AS(max_imaginarity_at_mixedness(3, 0.5, 0, 1),
                      InvalidMixedness);
  }
}

TEST_CASE("search result state respects the mixedness constraint") {
  const auto r = max_imaginarity_at_mixedness(4, 0.9, 8, 5);
  REQUIRE(s_linear(r.best_state) == Approx(0.9).margin(1e-7));
  REQUIRE(m_l1(r.best_state) == Approx(r.best_m_l1).margin(1e-12));
}

TEST_CASE("infeasible qutrit mixedness leaves a pinned positive gap") {
  const auto fx = test_support::load_fixtures().at("qutrit_infeasible_gaps");
  const auto svalues = fx.at("svalues").get<std::vector<double>>();
  const auto gaps = fx.at("gaps").get<std::vector<double>>();
  const int budget = fx.at("budget").get<int>();
  const auto seed = fx.at("seed").get<std::uint64_t>();

  // s = 0.3 is the canonical probe; all pinned values are regression floors
  for (std::size_t i = 0; i < svalues.size(); ++i) {
    const auto r =
        max_imaginarity_at_mixedness(3, svalues[i], budget, seed);
    REQUIRE(r.gap == gaps[i]);
    REQUIRE(gaps[i] > 1e-3);
  }
}

TEST_CASE("qutrit witness is deterministic and positive") {
  const double a = qutrit_unitary_witness(0.7, 60);
  const double b = qutrit_unitary_witness(0.7, 60);
  REQUIRE(a == b);
  REQUIRE(a > 0.0);
  REQUIRE_THROWS_AS(qutrit_unitary_witness(0.5, 60), BelowThreshold);
  REQUIRE_THROWS_AS(qutrit_unitary_witness(0.7, 10), GridOutOfRange);
}

TEST_CASE("the qubit analogue of the witness reaches distance zero") {
  // diag(1, i) maps the qubit MCMS exactly onto the qubit pattern state
  const double s = 0.75;
  const double p = std::sqrt(1.0 - s);
  DenseMatrix u(2, 2);
  u << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  const DenseMatrix rotated = u * mcms(2, p).matrix() * u.adjoint();
  REQUIRE((rotated - qubit_mims(s).matrix()).cwiseAbs().maxCoeff() == 0.0);
}
