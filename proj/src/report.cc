// Copyright 2026 The SNIP Solver Authors
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

#include "snip/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace snip {

namespace {

std::string Number(double v, const char* format = "%.10g") {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

std::int64_t RunRow::total_cuts() const {
  return std::accumulate(cuts.begin(), cuts.end(), std::int64_t{0});
}

RunRow MakeRow(const std::string& instance, const std::string& algorithm,
               const SolveResult& result) {
  RunRow row;
  row.instance = instance;
  row.algorithm = algorithm;
  row.status = SolveStatusName(result.status);
  row.objective = result.objective;
  row.bound = result.bound;
  row.gap = result.gap;
  row.nodes = result.nodes;
  row.cuts = result.cuts;
  row.time_total = result.time_total;
  row.time_cutgen = result.time_cutgen;
  row.time_lp = result.time_lp;
  return row;
}

std::string RowHeader() {
  return "instance\talg\tstatus\tobjective\tbound\tgap\tnodes\tcuts\t"
         "time_total\ttime_cutgen\ttime_lp";
}

std::string FormatRow(const RunRow& row, bool times) {
  std::string out = row.instance + '\t' + row.algorithm + '\t' + row.status;
  out += '\t' + Number(row.objective);
  out += '\t' + Number(row.bound);
  out += '\t' + Number(row.gap, "%.3g");
  out += '\t' + std::to_string(row.nodes);
  out += '\t' + std::to_string(row.total_cuts());
  for (double t : {row.time_total, row.time_cutgen, row.time_lp}) {
    out += '\t';
    out += times ? Number(t, "%.3f") : "-";
  }
  return out;
}

std::vector<Disagreement> CheckAgreement(const std::vector<RunRow>& rows,
                                         double gap_tolerance) {
  std::vector<Disagreement> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].status != "optimal") continue;
    for (size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j].status != "optimal" || rows[j].instance != rows[i].instance) {
        continue;
      }
      const double a = rows[i].objective;
      const double b = rows[j].objective;
      const double tol =
          2.0 * gap_tolerance * std::max({std::abs(a), std::abs(b), 1.0}) +
          1e-9;
      if (std::abs(a - b) > tol) {
        out.push_back({rows[i].instance, rows[i].algorithm, rows[j].algorithm,
                       a, b});
      }
    }
  }
  return out;
}

void WriteSummaryTable(std::ostream& out, const std::vector<RunRow>& rows,
                       const std::vector<std::string>& groups,
                       const std::vector<std::string>& algorithms) {
  struct Cell {
    double sum = 0.0;
    int solved = 0;
    int unsolved = 0;
  };
  std::map<std::pair<std::string, std::string>, Cell> cells;
  for (size_t i = 0; i < rows.size(); ++i) {
    Cell& c = cells[{groups[i], rows[i].algorithm}];
    if (rows[i].status == "optimal") {
      c.sum += rows[i].time_total;
      ++c.solved;
    } else {
      ++c.unsolved;
    }
  }
  std::vector<std::string> order;
  for (const std::string& g : groups) {
    if (std::find(order.begin(), order.end(), g) == order.end()) {
      order.push_back(g);
    }
  }
  out << "group";
  for (const std::string& a : algorithms) out << '\t' << a;
  out << '\n';
  for (const std::string& g : order) {
    out << g;
    for (const std::string& a : algorithms) {
      const auto it = cells.find({g, a});
      out << '\t';
      if (it == cells.end()) {
        out << '-';
        continue;
      }
      const Cell& c = it->second;
      out << (c.solved > 0 ? Number(c.sum / c.solved, "%.2f") : "-");
      if (c.unsolved > 0) out << " (" << c.unsolved << ')';
    }
    out << '\n';
  }
}

}  // namespace snip
