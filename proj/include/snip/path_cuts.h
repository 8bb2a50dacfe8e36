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

// Valid inequalities for pi >= h_P(x), where h_P(S) is the probability of
// traversing path P undetected when the arcs in S carry sensors:
//
//   h_P(S) = prod_{a in P} r_a * prod_{a in P and S} q_a / r_a.
//
// h_P is supermodular. Writing alpha_a = log r_a - log q_a and
// beta = -sum_{a in P} log r_a gives h_P(S) = exp(-beta - alpha(S)), which is
// what the subadditive lifting functions phi and psi are built on.
//
// Sets are membership vectors over D (the interdictable arcs, in Network
// numbering). Cuts are emitted over model variables where x_k is variable k
// and the value variable is given by the caller.

#ifndef SNIP_PATH_CUTS_H_
#define SNIP_PATH_CUTS_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "snip/linear_model.h"
#include "snip/network.h"

namespace snip {

using ArcSet = std::vector<std::uint8_t>;

// g(S) = exp(-beta - sum_{k in S and ground} alpha_k) over a ground set of
// D positions with alpha_k > 0.
struct ExpSetFunction {
  std::vector<int> ground;
  // Indexed by D position; 0 outside the ground set.
  std::vector<double> alpha;
  double beta = 0.0;

  double Value(const ArcSet& s) const;
  // g(S + k) - g(S); 0 when k is in S or outside the ground set.
  double Rho(int k, const ArcSet& s) const;
  double AlphaOf(const ArcSet& s) const;
};

class PathFunction {
 public:
  PathFunction(const Network& network, Path path);

  const Path& path() const { return path_; }
  int d_count() const { return d_count_; }
  // D positions of the interdictable arcs on P, increasing.
  const std::vector<int>& interdictable() const { return interdictable_; }
  // Split of the above by q > 0 (plus) and q = 0 (zero).
  const std::vector<int>& plus() const { return plus_; }
  const std::vector<int>& zero() const { return zero_; }
  bool on_path(int k) const { return position_[k] >= 0; }
  double r(int k) const { return r_[k]; }
  double q(int k) const { return q_[k]; }

  // r(P), r(P \ D), r(P_+), r(P_0).
  double r_path() const { return r_free_ * r_plus_ * r_zero_; }
  double r_free() const { return r_free_; }
  double r_plus() const { return r_plus_; }
  double r_zero() const { return r_zero_; }

  // h_P as an exponential function over P_+ with beta over all of P. Equals
  // h_P exactly when P_0 is empty.
  const ExpSetFunction& whole() const { return whole_; }
  // h_{P_+}: beta over P_+ only.
  const ExpSetFunction& plus_part() const { return plus_part_; }

 private:
  Path path_;
  int d_count_ = 0;
  std::vector<int> position_;
  std::vector<double> r_;
  std::vector<double> q_;
  std::vector<int> interdictable_;
  std::vector<int> plus_;
  std::vector<int> zero_;
  double r_free_ = 1.0;
  double r_plus_ = 1.0;
  double r_zero_ = 1.0;
  ExpSetFunction whole_;
  ExpSetFunction plus_part_;
};

ArcSet EmptySet(const PathFunction& pf);
ArcSet MakeSet(const PathFunction& pf, std::initializer_list<int> members);
// {k : x[k] > 0.5}.
ArcSet SupportSet(std::span<const double> x);

double HValue(const PathFunction& pf, const ArcSet& s);
// h_P(S + a) - h_P(S) for a D position `a`.
double Rho(const PathFunction& pf, int a, const ArcSet& s);

// Ordering and prefix sums for the lifting functions. For zeta/phi the order
// covers the ground arcs outside S; for xi/psi the ground arcs inside S. Both
// are by non-increasing alpha, ties by D position, skipping arcs whose
// marginal is below 1e-15 in magnitude.
struct LiftingContext {
  const ExpSetFunction* f = nullptr;
  ArcSet s;
  std::vector<int> order;
  // prefix[k] = A_k, prefix[0] = 0.
  std::vector<double> prefix;
  double alpha_s = 0.0;

  static LiftingContext Complement(const ExpSetFunction& f, ArcSet s);
  static LiftingContext Inside(const ExpSetFunction& f, ArcSet s);
};

// Value and index k for eta <= 0.
std::pair<double, int> Zeta(const LiftingContext& ctx, double eta);
double Phi(const LiftingContext& ctx, double eta);
// Value and index k for eta >= 0.
std::pair<double, int> Xi(const LiftingContext& ctx, double eta);
double Psi(const LiftingContext& ctx, double eta);

// Affine form v >= constant + sum coef_k x_k over D positions.
struct AffineBound {
  double constant = 0.0;
  std::vector<Term> terms;

  double Evaluate(std::span<const double> x) const;
};

// Lifted inequalities over the ground set of `f`.
AffineBound LiftedBound1(const ExpSetFunction& f, const ArcSet& s);
AffineBound LiftedBound2(const ExpSetFunction& f, const ArcSet& s);

// The cut builders below place the bound on `value_var`; -1 selects variable
// d_count() (the first variable after x).
Cut BaseCut9(const PathFunction& pf, const ArcSet& s, int value_var = -1,
             int owner = 0);
Cut BaseCut10(const PathFunction& pf, const ArcSet& s, int value_var = -1,
              int owner = 0);
// Throw MixedQError when P_0 is not empty.
Cut LiftedCut1(const PathFunction& pf, const ArcSet& s, int value_var = -1,
               int owner = 0);
Cut LiftedCut2(const PathFunction& pf, const ArcSet& s, int value_var = -1,
               int owner = 0);
// pi >= r(P)(1 - sum_{P and D} x). Throws NotAllZeroError when P_+ is not
// empty.
Cut QZeroCut(const PathFunction& pf, int value_var = -1, int owner = 0);

enum class LiftedFamily { kFirst, kSecond };
// pi >= r(P\D) r(P_0) [gamma'x + delta - r(P_+) sum_{P_0} x] with
// (gamma, delta) from the lifted inequality of `family` on h_{P_+} at
// S and P_+. Requires P_+ and P_0 both nonempty.
Cut MixedCut(const PathFunction& pf, const ArcSet& s, LiftedFamily family,
             int value_var = -1, int owner = 0);

inline constexpr double kCutViolation = 1e-6;

// Binary x: cuts from every applicable family at S = supp(x) on P, keeping
// those violated by more than kCutViolation. Empty when pi >= h_P(x) - 1e-6.
std::vector<Cut> SeparateInteger(const PathFunction& pf,
                                 std::span<const double> x, double pi,
                                 int value_var = -1, int owner = 0);

// Heuristic separation at fractional x: candidate sets come from greedily
// rounded ascent solutions of the two continuous selection problems (plus the
// 0.5-rounding of x); violated lifted cuts are returned. May miss violated
// cuts.
std::vector<Cut> SeparateFractional(const PathFunction& pf,
                                    std::span<const double> x, double pi,
                                    int value_var = -1, int owner = 0);

// Exposed for tests: the two continuous selection objectives over z indexed
// by D position (only the ground arcs of `f` matter).
double SelectionObjective1(const ExpSetFunction& f, std::span<const double> x,
                           double pi, std::span<const double> z);
double SelectionObjective2(const ExpSetFunction& f, std::span<const double> x,
                           double pi, std::span<const double> z);
// Projected-gradient ascent followed by greedy rounding.
ArcSet SelectSet(const ExpSetFunction& f, std::span<const double> x, double pi,
                 bool second);

}  // namespace snip

#endif  // SNIP_PATH_CUTS_H_
