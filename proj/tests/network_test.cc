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

#include <gtest/gtest.h>

#include <random>

#include "snip/errors.h"
#include "test_util.h"

namespace snip {
namespace {

Network Diamond() {
  return Network(4, {{0, 1, 0.9, std::nullopt, std::nullopt},
                     {1, 3, 0.8, 0.4, 1.0},
                     {0, 2, 0.7, 0.07, 1.0},
                     {2, 3, 0.9, std::nullopt, std::nullopt}});
}

TEST(NetworkTest, RejectsBadArcs) {
  EXPECT_THROW(Network(2, {{0, 2, 0.5}}), ValidationError);
  EXPECT_THROW(Network(2, {{0, 1, 1.5}}), ValidationError);
  EXPECT_THROW(Network(2, {{0, 1, 0.5, 0.5, 1.0}}), ValidationError);
  EXPECT_THROW(Network(2, {{0, 1, 0.5, 0.1, std::nullopt}}), ValidationError);
  EXPECT_THROW(Network(2, {{0, 1, 0.5}, {0, 1, 0.6}}), ValidationError);
  try {
    Network(3, {{0, 1, 0.5}, {1, 2, 0.6, 0.7, 1.0}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "arcs[1].q");
  }
}

TEST(NetworkTest, LineLabels) {
  const Network net(3, {{0, 1, 0.9}, {1, 2, 0.8}});
  const std::vector<double> sigma = {0.9, 0.8};
  const ReliabilityLabels labels = MaxReliabilityLabels(net, sigma, 2);
  EXPECT_NEAR(labels.pi[0], 0.72, 1e-15);
  EXPECT_NEAR(labels.pi[1], 0.8, 1e-15);
  EXPECT_EQ(labels.pi[2], 1.0);
}

TEST(NetworkTest, DiamondLabelsAndPath) {
  const Network net = Diamond();
  const std::vector<double> sigma = BaseSigma(net);
  const ReliabilityLabels labels = MaxReliabilityLabels(net, sigma, 3);
  EXPECT_NEAR(labels.pi[0], 0.72, 1e-15);
  ASSERT_TRUE(labels.successor[0].has_value());
  EXPECT_EQ(*labels.successor[0], 0);
  const Path path = ExtractPath(labels, net, 0);
  EXPECT_EQ(path.arcs, (std::vector<ArcId>{0, 1}));
  EXPECT_NEAR(PathReliability(path, sigma), 0.72, 1e-12);

  const Path empty = ExtractPath(labels, net, 3);
  EXPECT_TRUE(empty.arcs.empty());
  EXPECT_EQ(PathReliability(empty, sigma), 1.0);

  const std::vector<NodeId> dest = {3};
  const auto u = UninterdictedBounds(net, dest);
  EXPECT_NEAR(u.at(3)[0], 0.72, 1e-15);
  EXPECT_EQ(u.at(3)[3], 1.0);
}

TEST(NetworkTest, UnreachableNode) {
  const Network net(3, {{0, 1, 0.9}});
  const std::vector<double> sigma = {0.9};
  const ReliabilityLabels labels = MaxReliabilityLabels(net, sigma, 1);
  EXPECT_EQ(labels.pi[2], 0.0);
  EXPECT_THROW(ExtractPath(labels, net, 2), NoPathError);
  const std::vector<NodeId> dest = {1};
  EXPECT_EQ(UninterdictedBounds(net, dest).at(1)[2], 0.0);
}

TEST(NetworkTest, Sigmas) {
  const Network net(3, {{0, 1, 0.8, 0.4, 1.0}, {1, 2, 0.6, 0.0, 1.0}});
  const std::vector<double> none = {0.0, 0.0};
  const std::vector<double> both = {1.0, 1.0};
  const std::vector<double> half = {0.5, 0.5};
  EXPECT_EQ(PlanSigma(net, none), (std::vector<double>{0.8, 0.6}));
  EXPECT_EQ(PlanSigma(net, both), (std::vector<double>{0.4, 0.0}));
  EXPECT_NEAR(FractionalSigma(net, half)[0], 0.6, 1e-15);
  EXPECT_EQ(FractionalSigma(net, none), (std::vector<double>{0.8, 0.6}));
  EXPECT_EQ(FractionalSigma(net, both), (std::vector<double>{0.4, 0.0}));
}

// Random digraphs up to 12 nodes against enumeration of simple paths.
TEST(NetworkTest, LabelsMatchEnumeration) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && unit(rng) < 0.3) arcs.push_back({i, j, 0.05 + 0.95 * unit(rng)});
      }
    }
    const Network net(n, arcs);
    std::vector<double> sigma = BaseSigma(net);
    // Some exact zeros and ties.
    for (double& s : sigma) {
      const double u = unit(rng);
      if (u < 0.05) s = 0.0;
      if (u > 0.95) s = 0.5;
    }
    const NodeId t = static_cast<NodeId>(rng() % n);
    const ReliabilityLabels labels = MaxReliabilityLabels(net, sigma, t);
    for (NodeId i = 0; i < n; ++i) {
      const double expect = testing::EnumerateBestPath(net, sigma, i, t);
      ASSERT_NEAR(labels.pi[i], expect, 1e-12) << "trial " << trial;
      if (labels.pi[i] > 0.0 && i != t) {
        const Path p = ExtractPath(labels, net, i);
        EXPECT_NEAR(PathReliability(p, sigma), labels.pi[i], 1e-12);
        std::vector<char> seen(n, 0);
        NodeId v = i;
        for (ArcId a : p.arcs) {
          ASSERT_EQ(net.arc(a).tail, v);
          ASSERT_FALSE(seen[v]);
          seen[v] = 1;
          v = net.arc(a).head;
        }
        EXPECT_EQ(v, t);
        // Fixed point at i.
        double best = 0.0;
        for (ArcId a : net.out_arcs(i)) {
          best = std::max(best, sigma[a] * labels.pi[net.arc(a).head]);
        }
        EXPECT_NEAR(best, labels.pi[i], 1e-15);
      }
    }
    // Monotone in sigma.
    if (!sigma.empty()) {
      std::vector<double> raised = sigma;
      const size_t a = rng() % raised.size();
      raised[a] = std::min(1.0, raised[a] + 0.3);
      const ReliabilityLabels up = MaxReliabilityLabels(net, raised, t);
      for (NodeId i = 0; i < n; ++i) EXPECT_GE(up.pi[i], labels.pi[i]);
    }
  }
}

TEST(NetworkTest, TiesGoToSmallerArcId) {
  // Two routes of value 0.4; the one through arc 1 is labelled first.
  const Network net(4, {{0, 2, 0.8}, {0, 1, 0.5}, {1, 3, 0.8}, {2, 3, 0.5}});
  const ReliabilityLabels labels =
      MaxReliabilityLabels(net, BaseSigma(net), 3);
  EXPECT_EQ(*labels.successor[0], 0);
}

}  // namespace
}  // namespace snip
