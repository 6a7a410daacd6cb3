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
// File formats. Matrix JSON: {"dim": d, "entries": [[[re, im], ...], ...]},
// row-major, decimal doubles; readers accept a missing imaginary component.
// CSV uses '.' decimals and 17 significant digits (round-trip exact).

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "imix/channels.hpp"
#include "imix/measures.hpp"
#include "imix/search.hpp"
#include "imix/states.hpp"
#include "imix/tradeoffs.hpp"

namespace imix {

using Json = nlohmann::json;

inline Json state_to_json(const DensityMatrix& rho) {
  const int d = rho.dim();
  Json rows = Json::array();
  for (int j = 0; j < d; ++j) {
    Json row = Json::array();
    for (int k = 0; k < d; ++k)
      row.push_back(Json::array({rho(j, k).real(), rho(j, k).imag()}));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", d}, {"entries", std::move(rows)}};
}

inline DensityMatrix state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw IoError("state JSON needs \"dim\" and \"entries\" fields");
  const int d = j.at("dim").get<int>();
  const Json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != d)
    throw IoError("state JSON: \"entries\" must hold " + std::to_string(d) +
                  " rows");
  DenseMatrix m(d, d);
  for (int r = 0; r < d; ++r) {
    const Json& row = rows.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw IoError("state JSON: row " + std::to_string(r) + " must hold " +
                    std::to_string(d) + " entries");
    for (int c = 0; c < d; ++c) {
      const Json& e = row.at(static_cast<std::size_t>(c));
      double re = 0.0, im = 0.0;
      if (e.is_number()) {
        re = e.get<double>();
      } else if (e.is_array() && !e.empty() && e.size() <= 2) {
        re = e.at(0).get<double>();
        if (e.size() == 2) im = e.at(1).get<double>();
      } else {
        throw IoError("state JSON: entry (" + std::to_string(r) + "," +
                      std::to_string(c) +
                      ") must be [re, im], [re] or a number");
      }
      m(r, c) = Complex(re, im);
    }
  }
  return DensityMatrix::validate(m);
}

inline void save_state(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << state_to_json(rho).dump(2) << "\n";
}

inline DensityMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw IoError("cannot parse '" + path + "': " + e.what());
  }
  return state_from_json(j);
}

inline Json report_to_json(const MeasureReport& r) {
  return Json{{"m_l1", r.m_l1}, {"m_1", r.m_1},     {"m_r", r.m_r},
              {"c_l1", r.c_l1}, {"s_lin", r.s_lin}, {"s_vn", r.s_vn},
              {"s_1", r.s_1},   {"i_plus", r.i_plus}};
}

inline constexpr const char* kMeasureCsvHeader =
    "m_l1,m_1,m_r,c_l1,s_lin,s_vn,s_1,i_plus";

inline std::string csv_row(const MeasureReport& r) {
  std::string out;
  const double fields[8] = {r.m_l1, r.m_1,  r.m_r, r.c_l1,
                            r.s_lin, r.s_vn, r.s_1, r.i_plus};
  for (int i = 0; i < 8; ++i) {
    if (i) out.push_back(',');
    out += detail::fmt_double(fields[i]);
  }
  return out;
}

inline Json report_to_json(const TradeoffReport& r) {
  return Json{{"f_l1", r.f_l1},
              {"msi", r.msi},
              {"comp_1norm", r.comp_1norm},
              {"comp_entropy", r.comp_entropy},
              {"slacks",
               Json{{"f_l1", r.slack_f_l1},
                    {"msi", r.slack_msi},
                    {"comp_1norm", r.slack_comp_1norm},
                    {"comp_entropy", r.slack_comp_entropy}}},
              {"is_mims", r.is_mims}};
}

inline constexpr const char* kTradeoffCsvHeader =
    "index,f_l1,msi,comp_1norm,comp_entropy,slack_f_l1,slack_msi,"
    "slack_comp_1norm,slack_comp_entropy,is_mims";

inline std::string csv_row(const TradeoffReport& r, long index) {
  std::string out = std::to_string(index);
  const double fields[8] = {r.f_l1,
                            r.msi,
                            r.comp_1norm,
                            r.comp_entropy,
                            r.slack_f_l1,
                            r.slack_msi,
                            r.slack_comp_1norm,
                            r.slack_comp_entropy};
  for (double f : fields) {
    out.push_back(',');
    out += detail::fmt_double(f);
  }
  out.push_back(',');
  out += r.is_mims ? "1" : "0";
  return out;
}

inline constexpr const char* kSweepCsvHeader =
    "p,theta,f_in,f_out_closed,f_out_numeric";

inline std::string csv_row(const SweepRow& row) {
  std::string out = detail::fmt_double(row.p);
  const double fields[4] = {row.theta, row.f_in, row.f_out_closed,
                            row.f_out_numeric};
  for (double f : fields) {
    out.push_back(',');
    out += detail::fmt_double(f);
  }
  return out;
}

inline Json result_to_json(const SearchResult& r) {
  return Json{{"best_state", state_to_json(r.best_state)},
              {"best_m_l1", r.best_m_l1},
              {"bound", r.bound},
              {"gap", r.gap},
              {"evals", r.evals},
              {"seed", r.seed}};
}

}  // namespace imix
