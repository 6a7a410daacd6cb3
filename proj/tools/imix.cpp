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
// Command-line front end. Exit codes: 0 success, 1 domain error (invalid
// state, infeasible mixedness, ...), 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imix/imix.hpp"

namespace {

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw imix::IoError("cannot open '" + out_path + "' for writing");
  out << text;
}

imix::ChannelKind parse_kind(const std::string& name) {
  if (name == "bf") return imix::ChannelKind::BitFlip;
  if (name == "pd") return imix::ChannelKind::PhaseDamping;
  if (name == "dp") return imix::ChannelKind::Depolarizing;
  if (name == "ad") return imix::ChannelKind::AmplitudeDamping;
  throw imix::UnknownKind("unknown channel kind '" + name +
                          "' (expected bf, pd, dp or ad)");
}

// ---------------------------------------------------------------------------
// selftest: quick deterministic pass over the library's key invariants.

struct Check {
  std::string name;
  std::function<void()> run;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw imix::Error(what);
}

void expect_near(double got, double want, double tol, const std::string& what) {
  if (!(std::abs(got - want) <= tol))
    throw imix::Error(what + ": got " + imix::detail::fmt_double(got) +
                      ", want " + imix::detail::fmt_double(want));
}

int run_selftest() {
  using namespace imix;
  std::vector<Check> checks;

  checks.push_back({"validate accepts and rejects", [] {
    DensityMatrix::validate(DenseMatrix::Identity(2, 2) * 0.5);
    bool threw = false;
    DenseMatrix bad(2, 2);
    bad << 0.5, 0.6, 0.6, 0.5;
    try {
      DensityMatrix::validate(bad);
    } catch (const NotPsd&) {
      threw = true;
    }
    expect(threw, "0.6-coherence matrix must be rejected as not PSD");
  }});

  checks.push_back({"bloch round trip is exact", [] {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      BlochVector r{rng.uniform(-1, 1), rng.uniform(-1, 1),
                    rng.uniform(-1, 1)};
      if (r.norm_sq() > 1.0) continue;
      const BlochVector back = to_bloch(from_bloch(r));
      expect(back.r1 == r.r1 && back.r2 == r.r2 && back.r3 == r.r3,
             "to_bloch(from_bloch(r)) != r");
    }
  }});

  checks.push_back({"threshold closed form", [] {
    expect_near(threshold(2), 0.0, 1e-15, "threshold(2)");
    expect_near(threshold(3), 2.0 / 3.0, 1e-14, "threshold(3)");
    expect_near(threshold(4), 2.0 * std::numbers::sqrt2 - 2.0, 1e-14,
                "threshold(4)");
  }});

  checks.push_back({"qutrit saturation spectrum", [] {
    const auto sp = spectrum(qutrit_mims(2.0 / 3.0, 1));
    expect_near(sp.eigenvalues(0), 0.0, 1e-12, "lambda_min");
    expect_near(sp.eigenvalues(1), 1.0 / 3.0, 1e-12, "lambda_mid");
    expect_near(sp.eigenvalues(2), 2.0 / 3.0, 1e-12, "lambda_max");
  }});

  checks.push_back({"closed-form spectra match numeric", [] {
    for (int d = 2; d <= 8; ++d) {
      const double ymax = std::tan(std::numbers::pi / (2.0 * d)) / d;
      for (int i = 0; i < 5; ++i) {
        const double y = ymax * (i + 1) / 5.0;
        const auto cf = mims_spectrum_closed_form(d, y);
        const auto spec = MimsSpec::create(
            d, 1.0 - (d * y) * (d * y), MimsVariant::Lower);
        const auto sp = spectrum(ddim_mims(spec));
        expect((cf.eigenvalues - sp.eigenvalues).cwiseAbs().maxCoeff() <=
                   1e-10,
               "closed form vs numeric spectrum at d=" + std::to_string(d));
      }
    }
  }});

  checks.push_back({"MIMS saturates all four relations", [] {
    Rng rng(77);
    for (int d = 2; d <= 8; ++d) {
      const double t = threshold(d);
      for (int i = 0; i < 3; ++i) {
        const double s = t + (0.98 - t) * i / 2.0;
        const auto mask = SignMask::random(d, rng);
        const auto rho = ddim_mims(MimsSpec::create(
            d, s, i % 2 ? MimsVariant::Upper : MimsVariant::Lower, mask));
        const auto rep = verify(rho, 1e-9);
        expect_near(rep.f_l1, 1.0, 1e-10, "f_l1");
        expect_near(rep.msi, 1.0, 1e-10, "msi");
        expect_near(rep.comp_1norm, 1.0, 1e-10, "comp_1norm");
        expect_near(rep.comp_entropy, std::log(double(d)), 1e-10,
                    "comp_entropy");
        expect(rep.is_mims, "is_mims");
      }
    }
  }});

  checks.push_back({"below-threshold construction is rejected", [] {
    bool threw = false;
    try {
      qutrit_mims(0.5, 1);
    } catch (const BelowThreshold&) {
      threw = true;
    }
    expect(threw, "qutrit mixedness 0.5 must be infeasible");
  }});

  checks.push_back({"noisy |+> trade-off formula", [] {
    for (int d = 2; d <= 6; ++d)
      for (int k = 1; k <= 5; ++k) {
        const double p = k / 5.0;
        const double want =
            1.0 - d * (d - 2.0) * p * p / ((d - 1.0) * (d - 1.0));
        expect_near(f_l1(noisy_plus(d, p)), want, 1e-12, "noisy_plus F");
      }
  }});

  checks.push_back({"channel closed forms", [] {
    Rng rng(5);
    for (auto kind :
         {ChannelKind::BitFlip, ChannelKind::PhaseDamping,
          ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping}) {
      for (int i = 0; i < 11; ++i) {
        const double p = i / 10.0;
        const KrausChannel ch = [&] {
          switch (kind) {
            case ChannelKind::BitFlip: return bit_flip(p);
            case ChannelKind::PhaseDamping: return phase_damping(p);
            case ChannelKind::Depolarizing: return depolarizing(p);
            default: return amplitude_damping(p);
          }
        }();
        expect(is_real(ch), "named channels must be real operations");
        for (int k = 0; k < 40; ++k) {
          BlochVector r{rng.uniform(-1, 1), rng.uniform(-1, 1),
                        rng.uniform(-1, 1)};
          if (r.norm_sq() > 1.0) continue;
          const double closed = f_out_closed(kind, p, r);
          const double numeric = f_l1(apply(ch, from_bloch(r)));
          expect_near(closed, numeric, 1e-12, "closed vs numeric F");
          if (kind != ChannelKind::AmplitudeDamping)
            expect(closed >= f_l1(from_bloch(r)) - 1e-12,
                   "BF/PD/DP must not decrease F");
        }
      }
    }
  }});

  checks.push_back({"amplitude damping crossover at pi/2", [] {
    const auto rows = sweep_ad({0.5}, linspace(0.0, std::numbers::pi, 101));
    for (const auto& row : rows) {
      expect(std::abs(row.f_out_closed - row.f_out_numeric) <= 1e-12,
             "sweep row closed vs numeric");
      const double diff = row.f_out_closed - row.f_in;
      if (row.theta < std::numbers::pi / 2 - 1e-9)
        expect(diff <= 0.0, "F must not increase below pi/2");
      else if (row.theta > std::numbers::pi / 2 + 1e-9)
        expect(diff > 0.0, "F must increase above pi/2");
      else
        expect(std::abs(diff) <= 1e-12, "equality at pi/2");
    }
  }});

  checks.push_back({"real channels never increase m_1 or m_r", [] {
    for (int d = 2; d <= 3; ++d)
      for (int c = 0; c < 20; ++c) {
        const auto ch = random_real_channel(d, 2, derive_seed(900, c));
        expect(is_real(ch), "random real channel must be real");
        for (int i = 0; i < 20; ++i) {
          const auto rho = random_state(d, derive_seed(901 + d, i));
          const auto out = apply(ch, rho);
          if (d == 2)
            expect(m_l1(out) <= m_l1(rho) + 1e-9, "qubit m_l1 monotone");
          expect(m_1(out) <= m_1(rho) + 1e-9, "m_1 monotone");
          expect(m_r(out) <= m_r(rho) + 1e-9, "m_r monotone");
        }
      }
  }});

  checks.push_back({"trade-off inequalities on random states", [] {
    for (int d = 2; d <= 4; ++d)
      for (int i = 0; i < 500; ++i) {
        const auto rho = random_state(d, derive_seed(31 * d, i));
        const auto rep = verify(rho, 1e-9);
        expect(rep.slack_f_l1 >= -1e-9, "f_l1 slack");
        expect(rep.slack_msi >= -1e-9, "msi slack");
        expect(rep.slack_comp_1norm >= -1e-9, "comp_1norm slack");
        expect(rep.slack_comp_entropy >= -1e-9, "comp_entropy slack");
      }
  }});

  checks.push_back({"qubit MSI identity", [] {
    for (int i = 0; i < 500; ++i) {
      const auto rho = random_state(2, derive_seed(555, i));
      expect_near(msi(rho), 1.0, 1e-10, "qubit msi");
    }
  }});

  checks.push_back({"measure closed forms on qubits", [] {
    Rng rng(123);
    for (int i = 0; i < 200; ++i) {
      BlochVector r{rng.uniform(-1, 1), rng.uniform(-1, 1),
                    rng.uniform(-1, 1)};
      if (r.norm_sq() > 1.0) continue;
      const auto rho = from_bloch(r);
      expect_near(m_l1(rho), std::abs(r.r2), 1e-12, "m_l1 = |r2|");
      expect_near(m_1(rho), std::abs(r.r2), 1e-12, "m_1 = |r2|");
      expect_near(s_linear(rho), 1.0 - r.norm_sq(), 1e-12,
                  "s_lin = 1 - |r|^2");
      expect_near(s_1(rho), 1.0 - r.norm(), 1e-12, "s_1 = 1 - |r|");
      expect_near(i_plus(rho), r.r1 * r.r1 + r.r3 * r.r3, 1e-12,
                  "i_plus = r1^2 + r3^2");
    }
  }});

  checks.push_back({"MIMS orbit is measure-invariant", [] {
    Rng rng(9);
    const auto rho = qutrit_mims(0.8, 1);
    const auto base = report(rho);
    for (int k = 2; k <= 8; ++k) {
      const auto other = report(qutrit_mims(0.8, k));
      expect_near(other.m_l1, base.m_l1, 1e-12, "m_l1 orbit");
      expect_near(other.s_vn, base.s_vn, 1e-12, "s_vn orbit");
    }
    for (int i = 0; i < 10; ++i) {
      const auto mask = SignMask::random(3, rng);
      const auto conj = conjugate_by_sign_mask(rho, mask);
      expect((spectrum(conj).eigenvalues - spectrum(rho).eigenvalues)
                 .cwiseAbs()
                 .maxCoeff() <= 1e-12,
             "spectrum under mask");
    }
  }});

  int passed = 0;
  int failed = 0;
  for (const auto& check : checks) {
    try {
      check.run();
      std::cout << "ok   " << check.name << "\n";
      ++passed;
    } catch (const std::exception& e) {
      std::cout << "FAIL " << check.name << ": " << e.what() << "\n";
      ++failed;
    }
  }
  std::cout << "selftest: " << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"imix - imaginarity and mixedness toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // measure
  auto* measure_cmd =
      app.add_subcommand("measure", "evaluate all measures of a state");
  std::string measure_in, measure_out;
  bool measure_csv = false;
  measure_cmd->add_option("--in", measure_in, "state JSON file")->required();
  measure_cmd->add_option("--out", measure_out, "output file (default stdout)");
  measure_cmd->add_flag("--csv", measure_csv, "emit a CSV header + row");
  measure_cmd->callback([&] {
    const auto rho = imix::load_state(measure_in);
    const auto rep = imix::report(rho);
    std::string text;
    if (measure_csv)
      text = std::string(imix::kMeasureCsvHeader) + "\n" +
             imix::csv_row(rep) + "\n";
    else
      text = imix::report_to_json(rep).dump(2) + "\n";
    write_output(measure_out, text);
  });

  // mims
  auto* mims_cmd = app.add_subcommand(
      "mims", "construct a maximally imaginary mixed state");
  int mims_dim = 0;
  double mims_s = 0.0;
  std::string mims_variant = "lower", mims_mask, mims_out;
  mims_cmd->add_option("--dim", mims_dim, "dimension d >= 2")->required();
  mims_cmd->add_option("--mixedness", mims_s, "linear-entropy mixedness s")
      ->required();
  mims_cmd->add_option("--variant", mims_variant, "lower|upper")
      ->check(CLI::IsMember({"lower", "upper"}));
  mims_cmd->add_option("--mask", mims_mask, "sign mask such as +--+");
  mims_cmd->add_option("--out", mims_out, "output file (default stdout)");
  mims_cmd->callback([&] {
    const auto variant = mims_variant == "upper" ? imix::MimsVariant::Upper
                                                 : imix::MimsVariant::Lower;
    const auto mask = mims_mask.empty()
                          ? imix::SignMask::identity(mims_dim)
                          : imix::SignMask::from_string(mims_mask);
    const auto rho = imix::ddim_mims(
        imix::MimsSpec::create(mims_dim, mims_s, variant, mask));
    write_output(mims_out, imix::state_to_json(rho).dump(2) + "\n");
  });

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "evaluate the trade-off relations for a state or a sample");
  std::string verify_in, verify_out;
  double verify_tol = 1e-9;
  long verify_random = 0;
  int verify_dim = 0;
  std::uint64_t verify_seed = 0;
  verify_cmd->add_option("--in", verify_in, "state JSON file");
  verify_cmd->add_option("--tol", verify_tol, "saturation tolerance");
  auto* verify_random_opt = verify_cmd->add_option(
      "--random", verify_random, "verify N random states instead of a file");
  auto* verify_dim_opt =
      verify_cmd->add_option("--dim", verify_dim, "dimension for --random");
  auto* verify_seed_opt =
      verify_cmd->add_option("--seed", verify_seed, "seed for --random");
  verify_random_opt->needs(verify_dim_opt)->needs(verify_seed_opt);
  verify_cmd->add_option("--out", verify_out, "output file (default stdout)");
  verify_cmd->callback([&] {
    if ((verify_in.empty()) == (verify_random == 0))
      throw CLI::ValidationError(
          "verify", "exactly one of --in or --random is required");
    if (verify_random > 0) {
      std::string text = std::string(imix::kTradeoffCsvHeader) + "\n";
      for (long i = 0; i < verify_random; ++i) {
        const auto rho = imix::random_state(
            verify_dim, imix::derive_seed(verify_seed,
                                          static_cast<std::uint64_t>(i)));
        text += imix::csv_row(imix::verify(rho, verify_tol), i) + "\n";
      }
      write_output(verify_out, text);
    } else {
      const auto rho = imix::load_state(verify_in);
      const auto rep = imix::verify(rho, verify_tol);
      write_output(verify_out, imix::report_to_json(rep).dump(2) + "\n");
    }
  });

  // channel-sweep
  auto* sweep_cmd = app.add_subcommand(
      "channel-sweep", "sweep F before/after a Markovian channel");
  std::string sweep_kind, sweep_out;
  double sweep_p = -1.0;
  int sweep_p_steps = 21, sweep_theta_steps = 101;
  sweep_cmd->add_option("--kind", sweep_kind, "bf|pd|dp|ad")
      ->required()
      ->check(CLI::IsMember({"bf", "pd", "dp", "ad"}));
  sweep_cmd->add_option("--p", sweep_p,
                        "fix the channel parameter to a single value");
  sweep_cmd->add_option("--p-steps", sweep_p_steps,
                        "number of p grid points when --p is not given");
  sweep_cmd->add_option("--theta-steps", sweep_theta_steps,
                        "number of theta grid points on [0, pi]");
  sweep_cmd->add_option("--out", sweep_out, "output file (default stdout)");
  sweep_cmd->callback([&] {
    const auto kind = parse_kind(sweep_kind);
    const std::vector<double> p_grid =
        sweep_p >= 0.0 ? std::vector<double>{sweep_p}
                       : imix::linspace(0.0, 1.0, sweep_p_steps);
    const auto rows = imix::sweep(
        kind, p_grid, imix::linspace(0.0, std::numbers::pi,
                                     sweep_theta_steps));
    std::string text = std::string(imix::kSweepCsvHeader) + "\n";
    for (const auto& row : rows) text += imix::csv_row(row) + "\n";
    write_output(sweep_out, text);
  });

  // search
  auto* search_cmd = app.add_subcommand(
      "search", "search for the maximum imaginarity at fixed mixedness");
  int search_dim = 0, search_budget = 32;
  double search_s = 0.0;
  std::uint64_t search_seed = 0;
  std::string search_out;
  search_cmd->add_option("--dim", search_dim, "dimension d >= 2")->required();
  search_cmd->add_option("--mixedness", search_s, "linear-entropy mixedness")
      ->required();
  search_cmd->add_option("--budget", search_budget,
                         "number of random restarts");
  search_cmd->add_option("--seed", search_seed, "master seed")->required();
  search_cmd->add_option("--out", search_out, "output file (default stdout)");
  search_cmd->callback([&] {
    const auto result = imix::max_imaginarity_at_mixedness(
        search_dim, search_s, search_budget, search_seed);
    write_output(search_out, imix::result_to_json(result).dump(2) + "\n");
  });

  // selftest
  auto* selftest_cmd =
      app.add_subcommand("selftest", "run the built-in invariant suite");
  selftest_cmd->callback([&] { exit_code = run_selftest(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const imix::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
