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

// Instance data model, JSON document format, synthetic grid generator and the
// exhaustive-enumeration optimality oracle.

#ifndef SNIP_INSTANCE_H_
#define SNIP_INSTANCE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "snip/network.h"

namespace snip {

// An origin-destination pair realized with probability p.
struct Scenario {
  NodeId s = 0;
  NodeId t = 0;
  double p = 0.0;
};

struct Instance {
  Network network;
  std::vector<Scenario> scenarios;
  double budget = 0.0;

  // Distinct destination nodes, sorted.
  std::vector<NodeId> Destinations() const;
};

// Sensor placement over D (x[k] for the k-th interdictable arc).
struct InterdictionPlan {
  std::vector<std::uint8_t> x;

  double Cost(const Network& network) const;
  std::vector<double> AsDouble() const { return {x.begin(), x.end()}; }
};

// Checks scenario probabilities, reachability and the budget. Probabilities
// must sum to one within 1e-9 and are then renormalized exactly. Programmatic
// callers may use a zero budget; the document loader requires budget > 0.
void ValidateInstance(Instance& instance, bool require_positive_budget);

Instance LoadInstance(std::istream& in);
Instance LoadInstance(const std::filesystem::path& path);
Instance ParseInstance(const std::string& document);

void SaveInstance(const Instance& instance, std::ostream& out);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);
std::string SerializeInstance(const Instance& instance);

enum class QRegime { kFactor, kZero, kMixed };

struct GeneratorParams {
  int rows = 4;
  int cols = 4;
  double interdictable_fraction = 0.3;
  QRegime regime = QRegime::kFactor;
  // q = kappa * r under kFactor; under kMixed each interdictable arc gets
  // either kappa * r or 0 with equal probability.
  double kappa = 0.5;
  int scenario_count = 4;
  // When positive, destinations are drawn from a pool of at most this many
  // nodes.
  int destination_pool = 0;
  double budget = 1.0;
  std::uint64_t seed = 1;
};

// Directed rows x cols grid: forward arcs along each row, lateral arcs in both
// directions between vertically adjacent nodes. Deterministic for a seed.
// Throws InfeasibleParamsError when the requested scenarios cannot be found.
Instance GenerateInstance(const GeneratorParams& params);

struct BruteForceResult {
  double objective = 0.0;
  InterdictionPlan plan;
  std::int64_t evaluated = 0;
};

// Expected attacker reliability under plan `x`.
double EvaluatePlan(const Instance& instance, const InterdictionPlan& plan);

// Enumerates every budget-feasible interdiction set. Ties go to the
// lexicographically smallest plan. Throws TooLargeError when |D| > 25 or more
// than `max_sets` sets are feasible.
BruteForceResult BruteForce(const Instance& instance,
                            std::int64_t max_sets = 5'000'000);

// A small fixed instance used throughout the examples and tests:
// s=0, a=1, b=2, t=3; arcs s->a (r .9), a->t (r .8, q .4), s->b (r .7,
// q .07), b->t (r .9); one scenario (s,t); budget 1. Optimum 0.63.
Instance DiamondInstance();

}  // namespace snip

#endif  // SNIP_INSTANCE_H_
