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

#include "snip/linear_model.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace snip {

double Row::Activity(std::span<const double> values) const {
  double total = 0.0;
  for (const Term& t : terms) total += t.coef * values[t.var];
  return total;
}

int LinearModel::AddVariable(double lower, double upper, double objective,
                             bool integer, std::string name) {
  if (std::isnan(lower) || std::isnan(upper) || !std::isfinite(objective)) {
    throw std::invalid_argument("variable data must be numeric");
  }
  if (lower > upper) {
    throw std::invalid_argument("variable lower bound exceeds upper bound");
  }
  variables_.push_back({lower, upper, objective, integer, std::move(name)});
  return variable_count() - 1;
}

int LinearModel::AddRow(std::vector<Term> terms, RowSense sense, double rhs,
                        std::string name) {
  if (!std::isfinite(rhs)) throw std::invalid_argument("row rhs must be finite");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= variable_count()) {
      throw std::invalid_argument("row references unknown variable");
    }
    if (!std::isfinite(t.coef)) {
      throw std::invalid_argument("row coefficient must be finite");
    }
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  rows_.push_back({std::move(merged), sense, rhs, std::move(name)});
  return row_count() - 1;
}

void LinearModel::SetBounds(int var, double lower, double upper) {
  if (lower > upper) {
    throw std::invalid_argument("variable lower bound exceeds upper bound");
  }
  variables_[var].lower = lower;
  variables_[var].upper = upper;
}

double LinearModel::ObjectiveValue(std::span<const double> values) const {
  double total = 0.0;
  for (int j = 0; j < variable_count(); ++j) {
    total += variables_[j].objective * values[j];
  }
  return total;
}

double LinearModel::MaxViolation(std::span<const double> values) const {
  double worst = 0.0;
  for (int j = 0; j < variable_count(); ++j) {
    worst = std::max(worst, variables_[j].lower - values[j]);
    worst = std::max(worst, values[j] - variables_[j].upper);
  }
  for (const Row& row : rows_) {
    const double activity = row.Activity(values);
    if (row.sense != RowSense::kLessEqual) {
      worst = std::max(worst, row.rhs - activity);
    }
    if (row.sense != RowSense::kGreaterEqual) {
      worst = std::max(worst, activity - row.rhs);
    }
  }
  return worst;
}

std::string LinearModel::DebugString() const {
  std::ostringstream out;
  auto var_name = [&](int j) {
    return variables_[j].name.empty() ? "v" + std::to_string(j)
                                      : variables_[j].name;
  };
  out << "minimize";
  for (int j = 0; j < variable_count(); ++j) {
    if (variables_[j].objective != 0.0) {
      out << " " << std::showpos << variables_[j].objective << std::noshowpos
          << " " << var_name(j);
    }
  }
  out << "\n";
  for (int i = 0; i < row_count(); ++i) {
    const Row& row = rows_[i];
    out << (row.name.empty() ? "r" + std::to_string(i) : row.name) << ":";
    for (const Term& t : row.terms) {
      out << " " << std::showpos << t.coef << std::noshowpos << " "
          << var_name(t.var);
    }
    switch (row.sense) {
      case RowSense::kGreaterEqual:
        out << " >= ";
        break;
      case RowSense::kLessEqual:
        out << " <= ";
        break;
      case RowSense::kEqual:
        out << " = ";
        break;
    }
    out << row.rhs << "\n";
  }
  for (int j = 0; j < variable_count(); ++j) {
    out << variables_[j].lower << " <= " << var_name(j) << " <= "
        << variables_[j].upper << (variables_[j].integer ? " integer" : "")
        << "\n";
  }
  return out.str();
}

const char* ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kBenders:
      return "benders";
    case Provenance::kLifted1:
      return "supermod-lifted-1";
    case Provenance::kLifted2:
      return "supermod-lifted-2";
    case Provenance::kBase9:
      return "base-9";
    case Provenance::kBase10:
      return "base-10";
    case Provenance::kQZero:
      return "q-zero";
    case Provenance::kMixed:
      return "mixed";
  }
  return "unknown";
}

double Cut::Bound(std::span<const double> values) const {
  double total = constant;
  for (const Term& t : terms) total += t.coef * values[t.var];
  return total;
}

double Cut::Violation(std::span<const double> values) const {
  return Bound(values) - values[value_var];
}

Row Cut::ToRow() const {
  Row row;
  row.terms.push_back({value_var, 1.0});
  for (const Term& t : terms) row.terms.push_back({t.var, -t.coef});
  row.sense = RowSense::kGreaterEqual;
  row.rhs = constant;
  return row;
}

}  // namespace snip
