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

// Directed network with arc evasion probabilities and the maximum-reliability
// path routines every solution method is built on.

#ifndef SNIP_NETWORK_H_
#define SNIP_NETWORK_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace snip {

using NodeId = int;
using ArcId = int;

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  // Probability of traversing the arc undetected without a sensor.
  double r = 1.0;
  // Present iff the arc is interdictable: probability with a sensor, and the
  // sensor installation cost.
  std::optional<double> q;
  std::optional<double> cost;

  bool interdictable() const { return q.has_value(); }
};

// Immutable after construction. Interdictable arcs are numbered 0..|D|-1 in
// increasing arc id order; that numbering indexes every plan vector `x`.
class Network {
 public:
  Network() = default;
  // Throws ValidationError on endpoint, probability, cost or duplicate-arc
  // violations.
  Network(int node_count, std::vector<Arc> arcs);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // D, as arc ids in increasing order.
  const std::vector<ArcId>& interdictable_ids() const { return interdictable_; }
  int interdictable_count() const {
    return static_cast<int>(interdictable_.size());
  }
  // Position of `a` in D, or -1.
  int interdictable_index(ArcId a) const { return d_index_[a]; }

  // r_a, or q_a for interdictable arcs; q_a := r_a elsewhere.
  double r(ArcId a) const { return arcs_[a].r; }
  double q(ArcId a) const { return arcs_[a].q.value_or(arcs_[a].r); }
  double cost(ArcId a) const { return arcs_[a].cost.value_or(0.0); }

  const std::vector<ArcId>& in_arcs(NodeId v) const { return in_arcs_[v]; }
  const std::vector<ArcId>& out_arcs(NodeId v) const { return out_arcs_[v]; }

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<ArcId> interdictable_;
  std::vector<int> d_index_;
  std::vector<std::vector<ArcId>> in_arcs_;
  std::vector<std::vector<ArcId>> out_arcs_;
};

// Maximum-reliability values toward a fixed destination.
struct ReliabilityLabels {
  NodeId destination = 0;
  std::vector<double> pi;
  // Arc realizing pi[i]; empty at the destination and where pi[i] == 0.
  std::vector<std::optional<ArcId>> successor;
};

// A simple arc sequence from `origin` to `destination`.
struct Path {
  NodeId origin = 0;
  NodeId destination = 0;
  std::vector<ArcId> arcs;
};

// Label-setting maximum-product search toward `t`. `sigma` holds one
// reliability in [0,1] per arc. Ties between equally reliable extensions go
// to the smaller arc id.
ReliabilityLabels MaxReliabilityLabels(const Network& network,
                                       std::span<const double> sigma,
                                       NodeId t);

// Uninterdicted maximum-reliability values u[t][j] for every t in
// `destinations`.
std::map<NodeId, std::vector<double>> UninterdictedBounds(
    const Network& network, std::span<const NodeId> destinations);

// Follows successors from `s`. Throws NoPathError when labels.pi[s] == 0.
Path ExtractPath(const ReliabilityLabels& labels, const Network& network,
                 NodeId s);

// Product of `sigma` over the arcs of `path`.
double PathReliability(const Path& path, std::span<const double> sigma);

// sigma_a = r_a^(1-x_a) q_a^(x_a) on D, r_a elsewhere. `x` is indexed by the
// position in D. Fractional x is accepted (the power form is then a heuristic
// reliability used for path search).
std::vector<double> PlanSigma(const Network& network,
                              std::span<const double> x);

// sigma_a = (1-x_a) r_a + x_a q_a on D, r_a elsewhere.
std::vector<double> FractionalSigma(const Network& network,
                                    std::span<const double> x);

// All-r reliabilities.
std::vector<double> BaseSigma(const Network& network);

}  // namespace snip

#endif  // SNIP_NETWORK_H_
