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

#include "snip/instance.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "snip/errors.h"

namespace snip {

using json = nlohmann::ordered_json;

namespace {

std::string Indexed(const char* array, size_t i, const char* field) {
  return std::string(array) + "[" + std::to_string(i) + "]." + field;
}

void RejectUnknownKeys(const json& object, std::initializer_list<const char*> keys,
                       const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ParseError(where + ": unknown key \"" + key + "\"");
  }
}

double RequireNumber(const json& object, const char* key,
                     const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(where + ": missing \"" + key + "\"");
  }
  if (!it->is_number()) {
    throw ParseError(where + "." + key + ": expected a number");
  }
  return it->get<double>();
}

int RequireInt(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(where + ": missing \"" + key + "\"");
  }
  if (!it->is_number_integer()) {
    throw ParseError(where + "." + key + ": expected an integer");
  }
  return it->get<int>();
}

Instance FromJson(const json& doc) {
  if (!doc.is_object()) throw ParseError("document: expected an object");
  RejectUnknownKeys(doc, {"nodes", "arcs", "scenarios", "budget"}, "document");
  const int nodes = RequireInt(doc, "nodes", "document");
  auto arcs_it = doc.find("arcs");
  auto scen_it = doc.find("scenarios");
  if (arcs_it == doc.end() || !arcs_it->is_array()) {
    throw ParseError("document.arcs: expected an array");
  }
  if (scen_it == doc.end() || !scen_it->is_array()) {
    throw ParseError("document.scenarios: expected an array");
  }
  std::vector<Arc> arcs;
  for (size_t i = 0; i < arcs_it->size(); ++i) {
    const json& item = (*arcs_it)[i];
    const std::string where = "arcs[" + std::to_string(i) + "]";
    if (!item.is_object()) throw ParseError(where + ": expected an object");
    RejectUnknownKeys(item, {"tail", "head", "r", "q", "cost"}, where);
    Arc arc;
    arc.tail = RequireInt(item, "tail", where);
    arc.head = RequireInt(item, "head", where);
    arc.r = RequireNumber(item, "r", where);
    if (item.contains("q")) {
      arc.q = RequireNumber(item, "q", where);
      arc.cost = item.contains("cost") ? RequireNumber(item, "cost", where) : 1.0;
    } else if (item.contains("cost")) {
      throw ValidationError(where + ".cost",
                            "cost given for a non-interdictable arc");
    }
    arcs.push_back(arc);
  }
  Instance instance;
  instance.network = Network(nodes, std::move(arcs));
  for (size_t i = 0; i < scen_it->size(); ++i) {
    const json& item = (*scen_it)[i];
    const std::string where = "scenarios[" + std::to_string(i) + "]";
    if (!item.is_object()) throw ParseError(where + ": expected an object");
    RejectUnknownKeys(item, {"s", "t", "p"}, where);
    instance.scenarios.push_back({RequireInt(item, "s", where),
                                  RequireInt(item, "t", where),
                                  RequireNumber(item, "p", where)});
  }
  instance.budget = RequireNumber(doc, "budget", "document");
  ValidateInstance(instance, /*require_positive_budget=*/true);
  return instance;
}

json ToJson(const Instance& instance) {
  json doc;
  doc["nodes"] = instance.network.node_count();
  json arcs = json::array();
  for (const Arc& arc : instance.network.arcs()) {
    json item;
    item["tail"] = arc.tail;
    item["head"] = arc.head;
    item["r"] = arc.r;
    if (arc.q.has_value()) {
      item["q"] = *arc.q;
      item["cost"] = arc.cost.value_or(1.0);
    }
    arcs.push_back(std::move(item));
  }
  doc["arcs"] = std::move(arcs);
  json scenarios = json::array();
  for (const Scenario& sc : instance.scenarios) {
    scenarios.push_back({{"s", sc.s}, {"t", sc.t}, {"p", sc.p}});
  }
  doc["scenarios"] = std::move(scenarios);
  doc["budget"] = instance.budget;
  return doc;
}

}  // namespace

std::vector<NodeId> Instance::Destinations() const {
  std::set<NodeId> t;
  for (const Scenario& sc : scenarios) t.insert(sc.t);
  return {t.begin(), t.end()};
}

double InterdictionPlan::Cost(const Network& network) const {
  double total = 0.0;
  const auto& d = network.interdictable_ids();
  for (size_t k = 0; k < x.size(); ++k) {
    if (x[k]) total += network.cost(d[k]);
  }
  return total;
}

void ValidateInstance(Instance& instance, bool require_positive_budget) {
  const Network& net = instance.network;
  if (instance.scenarios.empty()) {
    throw ValidationError("scenarios", "at least one scenario is required");
  }
  if (!std::isfinite(instance.budget) || instance.budget < 0.0 ||
      (require_positive_budget && instance.budget <= 0.0)) {
    throw ValidationError("budget", "must be positive");
  }
  double total = 0.0;
  for (size_t i = 0; i < instance.scenarios.size(); ++i) {
    const Scenario& sc = instance.scenarios[i];
    if (sc.s < 0 || sc.s >= net.node_count()) {
      throw ValidationError(Indexed("scenarios", i, "s"), "node id out of range");
    }
    if (sc.t < 0 || sc.t >= net.node_count()) {
      throw ValidationError(Indexed("scenarios", i, "t"), "node id out of range");
    }
    if (sc.s == sc.t) {
      throw ValidationError(Indexed("scenarios", i, "t"),
                            "origin equals destination");
    }
    if (!(sc.p > 0.0) || !std::isfinite(sc.p)) {
      throw ValidationError(Indexed("scenarios", i, "p"), "must be positive");
    }
    total += sc.p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("scenarios", "probabilities sum to " +
                                           std::to_string(total) + ", not 1");
  }
  for (Scenario& sc : instance.scenarios) sc.p /= total;

  const auto u = UninterdictedBounds(net, instance.Destinations());
  for (size_t i = 0; i < instance.scenarios.size(); ++i) {
    const Scenario& sc = instance.scenarios[i];
    if (u.at(sc.t)[sc.s] <= 0.0) {
      throw ValidationError(Indexed("scenarios", i, "t"),
                            "destination unreachable from origin");
    }
  }
}

Instance ParseInstance(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    return FromJson(doc);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

Instance LoadInstance(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return LoadInstance(in);
}

std::string SerializeInstance(const Instance& instance) {
  return ToJson(instance).dump(1) + "\n";
}

void SaveInstance(const Instance& instance, std::ostream& out) {
  out << SerializeInstance(instance);
  if (!out) throw IoError("write failed");
}

void SaveInstance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  SaveInstance(instance, out);
  out.close();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

Instance GenerateInstance(const GeneratorParams& params) {
  if (params.rows < 2 || params.cols < 2) {
    throw InfeasibleParamsError("grid needs at least 2 rows and 2 columns");
  }
  if (params.scenario_count < 1) {
    throw InfeasibleParamsError("scenario count must be at least 1");
  }
  if (params.interdictable_fraction < 0.0 ||
      params.interdictable_fraction > 1.0) {
    throw InfeasibleParamsError("interdictable fraction must lie in [0,1]");
  }
  if (params.kappa < 0.0 || params.kappa >= 1.0) {
    throw InfeasibleParamsError("kappa must lie in [0,1)");
  }
  if (!(params.budget > 0.0)) {
    throw InfeasibleParamsError("budget must be positive");
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto id = [&](int i, int j) { return i * params.cols + j; };

  std::vector<Arc> arcs;
  for (int i = 0; i < params.rows; ++i) {
    for (int j = 0; j < params.cols; ++j) {
      if (j + 1 < params.cols) arcs.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < params.rows) {
        arcs.push_back({id(i, j), id(i + 1, j)});
        arcs.push_back({id(i + 1, j), id(i, j)});
      }
    }
  }
  for (Arc& arc : arcs) {
    // Rounded to 1e-4 so documents stay readable.
    arc.r = std::round((0.5 + 0.49 * unit(rng)) * 1e4) / 1e4;
  }
  std::vector<int> order(arcs.size());
  for (size_t a = 0; a < arcs.size(); ++a) order[a] = static_cast<int>(a);
  std::shuffle(order.begin(), order.end(), rng);
  const int d_count = static_cast<int>(
      std::lround(params.interdictable_fraction * static_cast<double>(arcs.size())));
  std::vector<int> chosen(order.begin(), order.begin() + d_count);
  std::sort(chosen.begin(), chosen.end());
  for (int a : chosen) {
    Arc& arc = arcs[a];
    double q = 0.0;
    switch (params.regime) {
      case QRegime::kFactor:
        q = params.kappa * arc.r;
        break;
      case QRegime::kZero:
        q = 0.0;
        break;
      case QRegime::kMixed:
        q = unit(rng) < 0.5 ? params.kappa * arc.r : 0.0;
        break;
    }
    arc.q = q;
    arc.cost = 1.0;
  }

  Instance instance;
  const int nodes = params.rows * params.cols;
  instance.network = Network(nodes, std::move(arcs));
  instance.budget = params.budget;

  std::vector<NodeId> pool;
  if (params.destination_pool > 0) {
    std::vector<NodeId> all(nodes);
    for (int v = 0; v < nodes; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    pool.assign(all.begin(),
                all.begin() + std::min(nodes, params.destination_pool));
  }
  const std::vector<double> sigma = BaseSigma(instance.network);
  std::map<NodeId, std::vector<double>> reach;
  std::set<std::pair<NodeId, NodeId>> used;
  std::uniform_int_distribution<int> node_dist(0, nodes - 1);
  const int max_attempts = 200 * params.scenario_count + 1000;
  for (int attempt = 0;
       attempt < max_attempts &&
       static_cast<int>(instance.scenarios.size()) < params.scenario_count;
       ++attempt) {
    const NodeId s = node_dist(rng);
    NodeId t;
    if (pool.empty()) {
      t = node_dist(rng);
    } else {
      t = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
    }
    if (s == t || used.count({s, t})) continue;
    auto it = reach.find(t);
    if (it == reach.end()) {
      it = reach.emplace(t, MaxReliabilityLabels(instance.network, sigma, t).pi)
               .first;
    }
    if (it->second[s] <= 0.0) continue;
    used.insert({s, t});
    instance.scenarios.push_back({s, t, 0.0});
  }
  if (static_cast<int>(instance.scenarios.size()) < params.scenario_count) {
    throw InfeasibleParamsError("could not find " +
                                std::to_string(params.scenario_count) +
                                " connected origin-destination pairs");
  }
  for (Scenario& sc : instance.scenarios) {
    sc.p = 1.0 / static_cast<double>(instance.scenarios.size());
  }
  ValidateInstance(instance, /*require_positive_budget=*/true);
  return instance;
}

double EvaluatePlan(const Instance& instance, const InterdictionPlan& plan) {
  const std::vector<double> sigma =
      PlanSigma(instance.network, plan.AsDouble());
  std::map<NodeId, std::vector<double>> pi;
  double total = 0.0;
  for (const Scenario& sc : instance.scenarios) {
    auto it = pi.find(sc.t);
    if (it == pi.end()) {
      it = pi.emplace(sc.t, MaxReliabilityLabels(instance.network, sigma, sc.t).pi)
               .first;
    }
    total += sc.p * it->second[sc.s];
  }
  return total;
}

BruteForceResult BruteForce(const Instance& instance, std::int64_t max_sets) {
  const Network& net = instance.network;
  const int d = net.interdictable_count();
  if (d > 25) {
    throw TooLargeError("brute force supports at most 25 interdictable arcs");
  }
  BruteForceResult best;
  best.objective = std::numeric_limits<double>::infinity();
  InterdictionPlan plan;
  plan.x.assign(d, 0);
  // Depth-first with x_k = 0 explored before x_k = 1: sets are visited in
  // lexicographic order of their characteristic vectors.
  std::int64_t visited = 0;
  auto recurse = [&](auto&& self, int k, double spent) -> void {
    if (k == d) {
      if (++visited > max_sets) {
        throw TooLargeError("more than " + std::to_string(max_sets) +
                            " budget-feasible interdiction sets");
      }
      const double value = EvaluatePlan(instance, plan);
      if (value < best.objective - 1e-12) {
        best.objective = value;
        best.plan = plan;
      }
      return;
    }
    self(self, k + 1, spent);
    const double c = net.cost(net.interdictable_ids()[k]);
    if (spent + c <= instance.budget + 1e-9) {
      plan.x[k] = 1;
      self(self, k + 1, spent + c);
      plan.x[k] = 0;
    }
  };
  recurse(recurse, 0, 0.0);
  best.evaluated = visited;
  return best;
}

Instance DiamondInstance() {
  std::vector<Arc> arcs = {
      {0, 1, 0.9, std::nullopt, std::nullopt},
      {1, 3, 0.8, 0.4, 1.0},
      {0, 2, 0.7, 0.07, 1.0},
      {2, 3, 0.9, std::nullopt, std::nullopt},
  };
  Instance instance;
  instance.network = Network(4, std::move(arcs));
  instance.scenarios = {{0, 3, 1.0}};
  instance.budget = 1.0;
  return instance;
}

}  // namespace snip
