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

#include "snip/simplex.h"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <utility>

#include "snip/errors.h"

namespace snip {

namespace {

using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

struct Entry {
  int row;
  double value;
};

// Column r of an elementary matrix; d is the FTRAN'd entering column.
struct Eta {
  int r;
  double pivot;
  std::vector<Entry> others;
};

enum class Phase { kDone, kInfeasible, kUnbounded, kRestart };

struct Blocker {
  int k;
  double t;
  VarStatus to;
};

class Engine {
 public:
  Engine(const LinearModel& model, const SimplexOptions& options)
      : options_(options), n_(model.variable_count()), m_(model.row_count()) {
    const int total = n_ + m_;
    columns_.assign(total, {});
    cost_.assign(total, 0.0);
    lower_.assign(total, 0.0);
    upper_.assign(total, 0.0);
    for (int j = 0; j < n_; ++j) {
      const Variable& v = model.variable(j);
      cost_[j] = v.objective;
      lower_[j] = v.lower;
      upper_[j] = v.upper;
    }
    for (int i = 0; i < m_; ++i) {
      const Row& row = model.row(i);
      for (const Term& t : row.terms) columns_[t.var].push_back({i, t.coef});
      columns_[n_ + i].push_back({i, -1.0});
      lower_[n_ + i] = row.sense == RowSense::kLessEqual ? -kInfinity : row.rhs;
      upper_[n_ + i] = row.sense == RowSense::kGreaterEqual ? kInfinity : row.rhs;
    }
    status_.assign(total, VarStatus::kAtLower);
    x_.assign(total, 0.0);
    iteration_limit_ = options_.iteration_limit > 0
                           ? options_.iteration_limit
                           : 20000 + 50 * static_cast<std::int64_t>(total);
  }

  LpSolution Solve(const LpBasis* warm_start) {
    if (m_ == 0) return SolveUnconstrained();
    if (!(warm_start && LoadBasis(*warm_start) && Factorize())) {
      SlackBasis();
      Factorize();
    }
    int restarts = 0;
    for (;;) {
      Phase result = Phase::kDone;
      if (MakeDualFeasible()) {
        result = DualSimplex();
        if (result == Phase::kInfeasible) return Finish(LpStatus::kInfeasible);
      }
      if (result != Phase::kRestart) {
        result = PrimalSimplex();
        if (result == Phase::kDone) return Finish(LpStatus::kOptimal);
        if (result == Phase::kInfeasible) return Finish(LpStatus::kInfeasible);
        if (result == Phase::kUnbounded) return Finish(LpStatus::kUnbounded);
      }
      if (++restarts > 3) throw NumericalError("simplex: basis kept going singular");
      SlackBasis();
      Factorize();
    }
  }

 private:
  bool IsFixed(int j) const { return lower_[j] == upper_[j]; }

  double NonbasicValue(int j) const {
    switch (status_[j]) {
      case VarStatus::kAtLower:
        return lower_[j];
      case VarStatus::kAtUpper:
        return upper_[j];
      default:
        return 0.0;
    }
  }

  VarStatus DefaultStatus(int j) const {
    if (std::isfinite(lower_[j])) return VarStatus::kAtLower;
    if (std::isfinite(upper_[j])) return VarStatus::kAtUpper;
    return VarStatus::kFree;
  }

  // Resolves a requested nonbasic status against the current bounds.
  VarStatus Sanitize(int j, VarStatus s) const {
    if (s == VarStatus::kAtLower && std::isfinite(lower_[j])) return s;
    if (s == VarStatus::kAtUpper && std::isfinite(upper_[j])) return s;
    return DefaultStatus(j);
  }

  void SlackBasis() {
    basis_.resize(m_);
    for (int j = 0; j < n_; ++j) status_[j] = DefaultStatus(j);
    for (int i = 0; i < m_; ++i) {
      basis_[i] = n_ + i;
      status_[n_ + i] = VarStatus::kBasic;
    }
  }

  bool LoadBasis(const LpBasis& warm) {
    const int total = n_ + m_;
    const int given = static_cast<int>(warm.status.size());
    if (given < n_ || given > total) return false;
    basis_.clear();
    for (int j = 0; j < total; ++j) {
      const VarStatus s = j < given ? warm.status[j] : VarStatus::kBasic;
      if (s == VarStatus::kBasic) {
        status_[j] = s;
        basis_.push_back(j);
      } else {
        status_[j] = Sanitize(j, s);
      }
    }
    return static_cast<int>(basis_.size()) == m_;
  }

  bool Factorize() {
    std::vector<Eigen::Triplet<double>> triplets;
    for (int k = 0; k < m_; ++k) {
      for (const Entry& e : columns_[basis_[k]]) {
        triplets.emplace_back(e.row, k, e.value);
      }
    }
    SparseMatrix b(m_, m_);
    b.setFromTriplets(triplets.begin(), triplets.end());
    b.makeCompressed();
    lu_.analyzePattern(b);
    lu_.factorize(b);
    etas_.clear();
    return lu_.info() == Eigen::Success;
  }

  void Ftran(Vector& v) const {
    v = lu_.solve(v).eval();
    for (const Eta& eta : etas_) {
      const double vr = v[eta.r] / eta.pivot;
      v[eta.r] = vr;
      if (vr == 0.0) continue;
      for (const Entry& e : eta.others) v[e.row] -= e.value * vr;
    }
  }

  void Btran(Vector& v) const {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double s = v[it->r];
      for (const Entry& e : it->others) s -= e.value * v[e.row];
      v[it->r] = s / it->pivot;
    }
    v = lu_.transpose().solve(v).eval();
  }

  Vector Column(int j) const {
    Vector v = Vector::Zero(m_);
    for (const Entry& e : columns_[j]) v[e.row] = e.value;
    return v;
  }

  void ComputePrimal() {
    Vector rhs = Vector::Zero(m_);
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::kBasic) continue;
      x_[j] = NonbasicValue(j);
      if (x_[j] == 0.0) continue;
      for (const Entry& e : columns_[j]) rhs[e.row] -= e.value * x_[j];
    }
    Ftran(rhs);
    for (int k = 0; k < m_; ++k) x_[basis_[k]] = rhs[k];
  }

  double Infeasibility(int j) const {
    if (x_[j] < lower_[j] - options_.feasibility_tolerance) {
      return lower_[j] - x_[j];
    }
    if (x_[j] > upper_[j] + options_.feasibility_tolerance) {
      return x_[j] - upper_[j];
    }
    return 0.0;
  }

  // y = B^-T c_B and d_j = c_j - y'a_j for the given cost vector.
  void ComputeDuals(const std::vector<double>& cost) {
    y_ = Vector::Zero(m_);
    for (int k = 0; k < m_; ++k) y_[k] = cost[basis_[k]];
    Btran(y_);
    d_.assign(n_ + m_, 0.0);
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::kBasic) continue;
      double dj = cost[j];
      for (const Entry& e : columns_[j]) dj -= y_[e.row] * e.value;
      d_[j] = dj;
    }
  }

  // Flips boxed nonbasics whose reduced cost has the wrong sign. Returns false
  // if some dual infeasibility cannot be repaired that way.
  bool MakeDualFeasible() {
    ComputeDuals(cost_);
    const double tol = options_.optimality_tolerance;
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::kBasic || IsFixed(j)) continue;
      const double dj = d_[j];
      switch (status_[j]) {
        case VarStatus::kAtLower:
          if (dj < -tol) {
            if (!std::isfinite(upper_[j])) return false;
            status_[j] = VarStatus::kAtUpper;
          }
          break;
        case VarStatus::kAtUpper:
          if (dj > tol) {
            if (!std::isfinite(lower_[j])) return false;
            status_[j] = VarStatus::kAtLower;
          }
          break;
        default:
          if (std::abs(dj) > tol) return false;
          break;
      }
    }
    return true;
  }

  void CountIteration() {
    if (++iterations_ > iteration_limit_) {
      throw NumericalError("simplex: iteration limit reached");
    }
  }

  // Replaces basis_[r] by q. `w` is B^-1 a_q. Returns false when the pivot is
  // numerically unusable.
  bool Pivot(int q, int r, const Vector& w, VarStatus leaving_status) {
    const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
    if (std::abs(w[r]) < options_.pivot_tolerance * scale) return false;
    const int leaving = basis_[r];
    Eta eta{r, w[r], {}};
    for (int k = 0; k < m_; ++k) {
      if (k != r && w[k] != 0.0) eta.others.push_back({k, w[k]});
    }
    etas_.push_back(std::move(eta));
    basis_[r] = q;
    status_[q] = VarStatus::kBasic;
    status_[leaving] = leaving_status;
    return true;
  }

  bool MaybeRefactor() {
    if (static_cast<int>(etas_.size()) < options_.refactor_interval) return true;
    return Factorize();
  }

  Phase DualSimplex() {
    int bad_pivots = 0;
    for (;;) {
      if (!MaybeRefactor()) return Phase::kRestart;
      ComputePrimal();
      int r = -1;
      double worst = 0.0;
      for (int k = 0; k < m_; ++k) {
        const double inf = Infeasibility(basis_[k]);
        if (inf > worst) {
          worst = inf;
          r = k;
        }
      }
      if (r < 0) return Phase::kDone;
      CountIteration();
      const int leaving = basis_[r];
      const double sgn = x_[leaving] < lower_[leaving] ? 1.0 : -1.0;
      ComputeDuals(cost_);
      Vector rho = Vector::Zero(m_);
      rho[r] = 1.0;
      Btran(rho);

      // Pivot row entries; the pivot tolerance is relative to their scale.
      std::vector<double> row(n_ + m_, 0.0);
      double scale = 1.0;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::kBasic || IsFixed(j)) continue;
        for (const Entry& e : columns_[j]) row[j] += rho[e.row] * e.value;
        scale = std::max(scale, std::abs(row[j]));
      }
      const double ptol = options_.pivot_tolerance * scale;
      std::vector<std::pair<int, double>> candidates;
      double theta_max = kInfinity;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::kBasic || IsFixed(j)) continue;
        const double alpha = row[j];
        double slack;
        if (status_[j] == VarStatus::kAtLower) {
          if (sgn * alpha >= -ptol) continue;
          slack = std::max(0.0, d_[j]);
        } else if (status_[j] == VarStatus::kAtUpper) {
          if (sgn * alpha <= ptol) continue;
          slack = std::max(0.0, -d_[j]);
        } else {
          if (std::abs(alpha) <= ptol) continue;
          slack = std::abs(d_[j]);
        }
        candidates.push_back({j, alpha});
        theta_max = std::min(
            theta_max, (slack + options_.optimality_tolerance) / std::abs(alpha));
      }
      if (candidates.empty()) return Phase::kInfeasible;
      int q = -1;
      double best_alpha = 0.0;
      for (const auto& [j, alpha] : candidates) {
        double slack = std::abs(d_[j]);
        if (status_[j] == VarStatus::kAtLower) slack = std::max(0.0, d_[j]);
        if (status_[j] == VarStatus::kAtUpper) slack = std::max(0.0, -d_[j]);
        if (slack / std::abs(alpha) <= theta_max &&
            std::abs(alpha) > best_alpha) {
          best_alpha = std::abs(alpha);
          q = j;
        }
      }
      Vector w = Column(q);
      Ftran(w);
      const VarStatus to =
          sgn > 0 ? VarStatus::kAtLower : VarStatus::kAtUpper;
      if (!Pivot(q, r, w, to)) {
        if (++bad_pivots > 5 || !Factorize()) return Phase::kRestart;
      }
    }
  }

  Phase PrimalSimplex() {
    const double ftol = options_.feasibility_tolerance;
    int degenerate = 0;
    int bad_pivots = 0;
    std::vector<double> phase_cost(n_ + m_, 0.0);
    for (;;) {
      if (!MaybeRefactor()) return Phase::kRestart;
      ComputePrimal();
      bool phase1 = false;
      std::fill(phase_cost.begin(), phase_cost.end(), 0.0);
      for (int k = 0; k < m_; ++k) {
        const int j = basis_[k];
        if (x_[j] < lower_[j] - ftol) {
          phase_cost[j] = -1.0;
          phase1 = true;
        } else if (x_[j] > upper_[j] + ftol) {
          phase_cost[j] = 1.0;
          phase1 = true;
        }
      }
      ComputeDuals(phase1 ? phase_cost : cost_);

      const bool bland = degenerate >= options_.degeneracy_threshold;
      const double otol = options_.optimality_tolerance;
      int q = -1;
      double dir = 0.0;
      double best = 0.0;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == VarStatus::kBasic || IsFixed(j)) continue;
        const double dj = d_[j];
        double jdir = 0.0;
        if (status_[j] == VarStatus::kAtLower && dj < -otol) {
          jdir = 1.0;
        } else if (status_[j] == VarStatus::kAtUpper && dj > otol) {
          jdir = -1.0;
        } else if (status_[j] == VarStatus::kFree && std::abs(dj) > otol) {
          jdir = dj < 0.0 ? 1.0 : -1.0;
        }
        if (jdir == 0.0) continue;
        if (bland) {
          q = j;
          dir = jdir;
          break;
        }
        if (std::abs(dj) > best) {
          best = std::abs(dj);
          q = j;
          dir = jdir;
        }
      }
      if (q < 0) return phase1 ? Phase::kInfeasible : Phase::kDone;
      CountIteration();

      Vector w = Column(q);
      Ftran(w);
      const double ptol =
          options_.pivot_tolerance * std::max(1.0, w.cwiseAbs().maxCoeff());
      // Harris ratio test: bound the step with tolerance-relaxed bounds, then
      // take the largest pivot among rows blocking within that step.
      std::vector<Blocker> blockers;
      double t_relaxed = upper_[q] - lower_[q];
      for (int k = 0; k < m_; ++k) {
        if (std::abs(w[k]) <= ptol) continue;
        const int i = basis_[k];
        const double rate = -dir * w[k];
        const bool below = x_[i] < lower_[i] - ftol;
        const bool above = x_[i] > upper_[i] + ftol;
        double target;
        VarStatus to;
        if (rate < 0.0) {
          if (below) continue;
          to = above ? VarStatus::kAtUpper : VarStatus::kAtLower;
          target = above ? upper_[i] : lower_[i];
        } else {
          if (above) continue;
          to = below ? VarStatus::kAtLower : VarStatus::kAtUpper;
          target = below ? lower_[i] : upper_[i];
        }
        if (!std::isfinite(target)) continue;
        const double gap = rate < 0.0 ? x_[i] - target : target - x_[i];
        const double t = std::max(gap, 0.0) / std::abs(rate);
        blockers.push_back({k, t, to});
        t_relaxed = std::min(t_relaxed, (gap + ftol) / std::abs(rate));
      }
      double t_best = upper_[q] - lower_[q];
      int r = -1;
      VarStatus leave_to = VarStatus::kAtLower;
      if (bland) {
        for (const Blocker& b : blockers) {
          if ((r < 0 && b.t < t_best) || (r >= 0 && b.t < t_best - 1e-12) ||
              (r >= 0 && b.t <= t_best + 1e-12 && basis_[b.k] < basis_[r])) {
            t_best = b.t;
            r = b.k;
            leave_to = b.to;
          }
        }
      } else {
        double w_best = 0.0;
        for (const Blocker& b : blockers) {
          if (b.t > t_relaxed || std::abs(w[b.k]) <= w_best) continue;
          w_best = std::abs(w[b.k]);
          r = b.k;
          leave_to = b.to;
        }
        for (const Blocker& b : blockers) {
          if (b.k == r && b.t < t_best) t_best = b.t;
        }
        if (t_best == upper_[q] - lower_[q]) r = -1;
      }
      if (!std::isfinite(t_best)) {
        if (phase1) throw NumericalError("simplex: unbounded phase-one ray");
        return Phase::kUnbounded;
      }
      degenerate = t_best < 1e-12 ? degenerate + 1 : 0;
      if (r < 0) {
        status_[q] = status_[q] == VarStatus::kAtLower ? VarStatus::kAtUpper
                                                      : VarStatus::kAtLower;
        continue;
      }
      if (!Pivot(q, r, w, leave_to)) {
        if (++bad_pivots > 5 || !Factorize()) return Phase::kRestart;
      }
    }
  }

  LpSolution SolveUnconstrained() {
    LpSolution sol;
    sol.values.assign(n_, 0.0);
    sol.reduced_costs = cost_;
    sol.basis.status.assign(n_, VarStatus::kAtLower);
    for (int j = 0; j < n_; ++j) {
      double v;
      if (cost_[j] > 0.0) {
        v = lower_[j];
      } else if (cost_[j] < 0.0) {
        v = upper_[j];
      } else {
        v = std::isfinite(lower_[j]) ? lower_[j]
            : std::isfinite(upper_[j]) ? upper_[j]
                                       : 0.0;
      }
      if (!std::isfinite(v)) {
        sol.status = LpStatus::kUnbounded;
        return sol;
      }
      sol.values[j] = v;
      sol.basis.status[j] = v == lower_[j]   ? VarStatus::kAtLower
                            : v == upper_[j] ? VarStatus::kAtUpper
                                             : VarStatus::kFree;
      sol.objective += cost_[j] * v;
    }
    sol.status = LpStatus::kOptimal;
    return sol;
  }

  LpSolution Finish(LpStatus status) {
    LpSolution sol;
    sol.status = status;
    sol.iterations = iterations_;
    sol.basis.status = status_;
    if (status != LpStatus::kOptimal) return sol;
    ComputePrimal();
    ComputeDuals(cost_);
    sol.values.assign(x_.begin(), x_.begin() + n_);
    // Snap nonbasic structurals exactly; clip basics into their bounds.
    for (int j = 0; j < n_; ++j) {
      sol.values[j] = std::clamp(sol.values[j], lower_[j], upper_[j]);
    }
    sol.row_duals.assign(y_.data(), y_.data() + m_);
    sol.reduced_costs.assign(d_.begin(), d_.begin() + n_);
    for (int j = 0; j < n_; ++j) sol.objective += cost_[j] * sol.values[j];
    return sol;
  }

  SimplexOptions options_;
  int n_;
  int m_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<VarStatus> status_;
  std::vector<int> basis_;
  std::vector<double> x_;
  Vector y_;
  std::vector<double> d_;
  mutable Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu_;
  std::vector<Eta> etas_;
  std::int64_t iterations_ = 0;
  std::int64_t iteration_limit_ = 0;
};

}  // namespace

LpSolution SolveLp(const LinearModel& model, const LpBasis* warm_start,
                   const SimplexOptions& options) {
  Engine engine(model, options);
  return engine.Solve(warm_start);
}

}  // namespace snip
