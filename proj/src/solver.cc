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

#include "snip/solver.h"

#include <algorithm>

#include "snip/benders.h"
#include "snip/def_models.h"
#include "snip/path_driver.h"

namespace snip {

const char* AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kDef:
      return "def";
    case Algorithm::kCompactDef:
      return "cdef";
    case Algorithm::kBenders:
      return "benders";
    case Algorithm::kPath:
      return "path";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kDef, Algorithm::kCompactDef,
                      Algorithm::kBenders, Algorithm::kPath}) {
    if (name == AlgorithmName(a)) return a;
  }
  return std::nullopt;
}

const char* SigmaModeName(SigmaMode m) {
  switch (m) {
    case SigmaMode::kConvex:
      return "convex";
    case SigmaMode::kPower:
      return "power";
    case SigmaMode::kBoth:
      return "both";
  }
  return "unknown";
}

std::optional<SigmaMode> ParseSigmaMode(const std::string& name) {
  for (SigmaMode m : {SigmaMode::kConvex, SigmaMode::kPower, SigmaMode::kBoth}) {
    if (name == SigmaModeName(m)) return m;
  }
  return std::nullopt;
}

BranchAndCutOptions SolveOptions::EngineOptions(double elapsed) const {
  BranchAndCutOptions engine;
  engine.gap_tolerance = gap_tolerance;
  engine.time_limit = std::max(0.0, time_limit - elapsed);
  engine.node_limit = node_limit;
  engine.record_cuts = record_cuts;
  return engine;
}

SolveResult Solve(const Instance& instance, Algorithm algorithm,
                  const SolveOptions& options) {
  switch (algorithm) {
    case Algorithm::kDef:
      return SolveDef(instance, options);
    case Algorithm::kCompactDef:
      return SolveCompactDef(instance, options);
    case Algorithm::kBenders:
      return SolveBenders(instance, options);
    case Algorithm::kPath:
      return SolvePath(instance, options);
  }
  return {};
}

}  // namespace snip
