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

// Minimization models with bounded variables and sparse rows, and the cut
// record exchanged between separators and the branch-and-cut engine.

#ifndef SNIP_LINEAR_MODEL_H_
#define SNIP_LINEAR_MODEL_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace snip {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kGreaterEqual, kLessEqual, kEqual };

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Variable {
  double lower = 0.0;
  double upper = kInfinity;
  double objective = 0.0;
  bool integer = false;
  std::string name;
};

struct Row {
  std::vector<Term> terms;
  RowSense sense = RowSense::kGreaterEqual;
  double rhs = 0.0;
  std::string name;

  double Activity(std::span<const double> values) const;
};

class LinearModel {
 public:
  // Returns the new variable index. Throws std::invalid_argument when
  // lower > upper or any value is NaN.
  int AddVariable(double lower, double upper, double objective, bool integer,
                  std::string name = {});
  // Duplicate variables in `terms` are merged. Throws std::invalid_argument on
  // unknown variables or non-finite data.
  int AddRow(std::vector<Term> terms, RowSense sense, double rhs,
             std::string name = {});

  void SetBounds(int var, double lower, double upper);

  int variable_count() const { return static_cast<int>(variables_.size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const Variable& variable(int j) const { return variables_[j]; }
  const std::vector<Variable>& variables() const { return variables_; }
  const Row& row(int i) const { return rows_[i]; }
  const std::vector<Row>& rows() const { return rows_; }

  double ObjectiveValue(std::span<const double> values) const;
  // Largest bound or row violation of `values`.
  double MaxViolation(std::span<const double> values) const;

  // Human-readable listing, one inequality per line. Diagnostic only.
  std::string DebugString() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Row> rows_;
};

// Family a cut was generated from.
enum class Provenance {
  kBenders,
  kLifted1,
  kLifted2,
  kBase9,
  kBase10,
  kQZero,
  kMixed,
};
inline constexpr int kProvenanceCount = 7;

const char* ProvenanceName(Provenance p);

// value_var >= constant + sum(terms). `owner` identifies the scenario
// (Benders) or origin-destination pair (path cuts) whose value variable the cut
// bounds.
struct Cut {
  int value_var = 0;
  double constant = 0.0;
  std::vector<Term> terms;
  Provenance provenance = Provenance::kBenders;
  int owner = 0;

  // constant + sum(terms) at `values`.
  double Bound(std::span<const double> values) const;
  // Bound(values) - values[value_var]; positive when violated.
  double Violation(std::span<const double> values) const;
  Row ToRow() const;
};

}  // namespace snip

#endif  // SNIP_LINEAR_MODEL_H_
