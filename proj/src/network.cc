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

#include "snip/network.h"

#include <cmath>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "snip/errors.h"

namespace snip {

namespace {

std::string ArcField(int a, const char* field) {
  return "arcs[" + std::to_string(a) + "]." + field;
}

}  // namespace

Network::Network(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
  if (node_count_ <= 0) {
    throw ValidationError("nodes", "must be positive");
  }
  in_arcs_.resize(node_count_);
  out_arcs_.resize(node_count_);
  d_index_.assign(arcs_.size(), -1);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (int a = 0; a < arc_count(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.tail < 0 || arc.tail >= node_count_) {
      throw ValidationError(ArcField(a, "tail"), "node id out of range");
    }
    if (arc.head < 0 || arc.head >= node_count_) {
      throw ValidationError(ArcField(a, "head"), "node id out of range");
    }
    if (arc.tail == arc.head) {
      throw ValidationError(ArcField(a, "head"), "self-loop");
    }
    if (!seen.insert({arc.tail, arc.head}).second) {
      throw ValidationError(ArcField(a, "head"), "duplicate arc");
    }
    if (!(arc.r > 0.0 && arc.r <= 1.0)) {
      throw ValidationError(ArcField(a, "r"), "must lie in (0,1]");
    }
    if (arc.q.has_value()) {
      if (!(*arc.q >= 0.0 && *arc.q < arc.r)) {
        throw ValidationError(ArcField(a, "q"), "must lie in [0,r)");
      }
      if (!arc.cost.has_value() || !(*arc.cost > 0.0) ||
          !std::isfinite(*arc.cost)) {
        throw ValidationError(ArcField(a, "cost"), "must be positive");
      }
      d_index_[a] = static_cast<int>(interdictable_.size());
      interdictable_.push_back(a);
    } else if (arc.cost.has_value()) {
      throw ValidationError(ArcField(a, "cost"),
                            "cost given for a non-interdictable arc");
    }
    out_arcs_[arc.tail].push_back(a);
    in_arcs_[arc.head].push_back(a);
  }
}

ReliabilityLabels MaxReliabilityLabels(const Network& network,
                                       std::span<const double> sigma,
                                       NodeId t) {
  const int n = network.node_count();
  ReliabilityLabels labels;
  labels.destination = t;
  labels.pi.assign(n, 0.0);
  labels.successor.assign(n, std::nullopt);
  labels.pi[t] = 1.0;

  // Max-heap on label; equal labels pop in node id order.
  using Entry = std::pair<double, NodeId>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  std::vector<char> settled(n, 0);
  heap.push({1.0, t});
  while (!heap.empty()) {
    const auto [value, j] = heap.top();
    heap.pop();
    if (settled[j] || value != labels.pi[j]) continue;
    settled[j] = 1;
    for (ArcId a : network.in_arcs(j)) {
      const NodeId i = network.arc(a).tail;
      if (settled[i]) continue;
      const double candidate = sigma[a] * value;
      if (candidate <= 0.0) continue;
      if (candidate > labels.pi[i] ||
          (candidate == labels.pi[i] && labels.successor[i].has_value() &&
           a < *labels.successor[i])) {
        const bool improved = candidate > labels.pi[i];
        labels.pi[i] = candidate;
        labels.successor[i] = a;
        if (improved) heap.push({candidate, i});
      }
    }
  }
  return labels;
}

std::map<NodeId, std::vector<double>> UninterdictedBounds(
    const Network& network, std::span<const NodeId> destinations) {
  const std::vector<double> sigma = BaseSigma(network);
  std::map<NodeId, std::vector<double>> u;
  for (NodeId t : destinations) {
    if (u.count(t)) continue;
    u[t] = MaxReliabilityLabels(network, sigma, t).pi;
  }
  return u;
}

Path ExtractPath(const ReliabilityLabels& labels, const Network& network,
                 NodeId s) {
  Path path;
  path.origin = s;
  path.destination = labels.destination;
  if (s == labels.destination) return path;
  if (labels.pi[s] <= 0.0) {
    throw NoPathError("node " + std::to_string(s) + " cannot reach node " +
                      std::to_string(labels.destination));
  }
  NodeId v = s;
  while (v != labels.destination) {
    const ArcId a = *labels.successor[v];
    path.arcs.push_back(a);
    v = network.arc(a).head;
  }
  return path;
}

double PathReliability(const Path& path, std::span<const double> sigma) {
  double value = 1.0;
  for (ArcId a : path.arcs) value *= sigma[a];
  return value;
}

std::vector<double> PlanSigma(const Network& network,
                              std::span<const double> x) {
  std::vector<double> sigma = BaseSigma(network);
  const auto& d = network.interdictable_ids();
  for (size_t k = 0; k < d.size(); ++k) {
    const ArcId a = d[k];
    const double xa = x[k];
    if (xa <= 0.0) continue;
    const double r = network.r(a);
    const double q = network.q(a);
    if (xa >= 1.0) {
      sigma[a] = q;
    } else {
      sigma[a] = q > 0.0 ? std::pow(r, 1.0 - xa) * std::pow(q, xa) : 0.0;
    }
  }
  return sigma;
}

std::vector<double> FractionalSigma(const Network& network,
                                    std::span<const double> x) {
  std::vector<double> sigma = BaseSigma(network);
  const auto& d = network.interdictable_ids();
  for (size_t k = 0; k < d.size(); ++k) {
    const ArcId a = d[k];
    sigma[a] = (1.0 - x[k]) * network.r(a) + x[k] * network.q(a);
  }
  return sigma;
}

std::vector<double> BaseSigma(const Network& network) {
  std::vector<double> sigma(network.arc_count());
  for (int a = 0; a < network.arc_count(); ++a) sigma[a] = network.r(a);
  return sigma;
}

}  // namespace snip
