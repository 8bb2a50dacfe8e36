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

#include "snip/path_cuts.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "snip/errors.h"

namespace snip {

namespace {

constexpr double kNegligibleRho = 1e-15;

ArcSet Without(ArcSet s, int k) {
  s[k] = 0;
  return s;
}

std::vector<int> SortByAlpha(const ExpSetFunction& f, std::vector<int> arcs) {
  std::sort(arcs.begin(), arcs.end(), [&](int a, int b) {
    if (f.alpha[a] != f.alpha[b]) return f.alpha[a] > f.alpha[b];
    return a < b;
  });
  return arcs;
}

std::vector<double> PrefixSums(const ExpSetFunction& f,
                               const std::vector<int>& order) {
  std::vector<double> prefix(order.size() + 1, 0.0);
  for (size_t i = 0; i < order.size(); ++i) {
    prefix[i + 1] = prefix[i] + f.alpha[order[i]];
  }
  return prefix;
}

int ResolveValueVar(const PathFunction& pf, int value_var) {
  return value_var < 0 ? pf.d_count() : value_var;
}

Cut ToCut(AffineBound bound, Provenance provenance, int value_var, int owner) {
  Cut cut;
  cut.value_var = value_var;
  cut.constant = bound.constant;
  cut.terms = std::move(bound.terms);
  cut.provenance = provenance;
  cut.owner = owner;
  return cut;
}

double CutBound(const Cut& cut, std::span<const double> x) {
  double total = cut.constant;
  for (const Term& t : cut.terms) total += t.coef * x[t.var];
  return total;
}

ArcSet PathSupport(const PathFunction& pf, std::span<const double> x) {
  ArcSet s(pf.d_count(), 0);
  for (int k : pf.interdictable()) s[k] = x[k] > 0.5 ? 1 : 0;
  return s;
}

}  // namespace

double ExpSetFunction::AlphaOf(const ArcSet& s) const {
  double total = 0.0;
  for (int k : ground) {
    if (s[k]) total += alpha[k];
  }
  return total;
}

double ExpSetFunction::Value(const ArcSet& s) const {
  return std::exp(-beta - AlphaOf(s));
}

double ExpSetFunction::Rho(int k, const ArcSet& s) const {
  if (s[k] || alpha[k] == 0.0) return 0.0;
  return Value(s) * std::expm1(-alpha[k]);
}

PathFunction::PathFunction(const Network& network, Path path)
    : path_(std::move(path)), d_count_(network.interdictable_count()) {
  position_.assign(d_count_, -1);
  r_.assign(d_count_, 1.0);
  q_.assign(d_count_, 1.0);
  for (int k = 0; k < d_count_; ++k) {
    const ArcId a = network.interdictable_ids()[k];
    r_[k] = network.r(a);
    q_[k] = network.q(a);
  }
  double log_r_path = 0.0;
  double log_r_plus = 0.0;
  for (size_t i = 0; i < path_.arcs.size(); ++i) {
    const ArcId a = path_.arcs[i];
    const double r = network.r(a);
    log_r_path += std::log(r);
    const int k = network.interdictable_index(a);
    if (k < 0) {
      r_free_ *= r;
      continue;
    }
    position_[k] = static_cast<int>(i);
    interdictable_.push_back(k);
    if (q_[k] > 0.0) {
      plus_.push_back(k);
      r_plus_ *= r;
      log_r_plus += std::log(r);
    } else {
      zero_.push_back(k);
      r_zero_ *= r;
    }
  }
  std::sort(interdictable_.begin(), interdictable_.end());
  std::sort(plus_.begin(), plus_.end());
  std::sort(zero_.begin(), zero_.end());
  whole_.ground = plus_;
  whole_.alpha.assign(d_count_, 0.0);
  for (int k : plus_) whole_.alpha[k] = std::log(r_[k]) - std::log(q_[k]);
  plus_part_ = whole_;
  whole_.beta = -log_r_path;
  plus_part_.beta = -log_r_plus;
}

ArcSet EmptySet(const PathFunction& pf) { return ArcSet(pf.d_count(), 0); }

ArcSet MakeSet(const PathFunction& pf, std::initializer_list<int> members) {
  ArcSet s = EmptySet(pf);
  for (int k : members) s[k] = 1;
  return s;
}

ArcSet SupportSet(std::span<const double> x) {
  ArcSet s(x.size(), 0);
  for (size_t k = 0; k < x.size(); ++k) s[k] = x[k] > 0.5 ? 1 : 0;
  return s;
}

double HValue(const PathFunction& pf, const ArcSet& s) {
  double value = pf.r_path();
  for (int k : pf.interdictable()) {
    if (s[k]) value *= pf.q(k) / pf.r(k);
  }
  return value;
}

double Rho(const PathFunction& pf, int a, const ArcSet& s) {
  if (s[a] || !pf.on_path(a)) return 0.0;
  ArcSet with = s;
  with[a] = 1;
  return HValue(pf, with) - HValue(pf, s);
}

LiftingContext LiftingContext::Complement(const ExpSetFunction& f, ArcSet s) {
  LiftingContext ctx;
  ctx.f = &f;
  std::vector<int> arcs;
  for (int k : f.ground) {
    if (!s[k] && std::abs(f.Rho(k, s)) >= kNegligibleRho) arcs.push_back(k);
  }
  ctx.order = SortByAlpha(f, std::move(arcs));
  ctx.prefix = PrefixSums(f, ctx.order);
  ctx.alpha_s = f.AlphaOf(s);
  ctx.s = std::move(s);
  return ctx;
}

LiftingContext LiftingContext::Inside(const ExpSetFunction& f, ArcSet s) {
  LiftingContext ctx;
  ctx.f = &f;
  std::vector<int> arcs;
  for (int k : f.ground) {
    if (s[k] && std::abs(f.Rho(k, Without(s, k))) >= kNegligibleRho) {
      arcs.push_back(k);
    }
  }
  ctx.order = SortByAlpha(f, std::move(arcs));
  ctx.prefix = PrefixSums(f, ctx.order);
  ctx.alpha_s = f.AlphaOf(s);
  ctx.s = std::move(s);
  return ctx;
}

std::pair<double, int> Zeta(const LiftingContext& ctx, double eta) {
  const ExpSetFunction& f = *ctx.f;
  const int m = static_cast<int>(ctx.order.size());
  int k = 0;
  while (k < m && ctx.prefix[k] + eta < 0.0) ++k;
  double value = -std::exp(-ctx.alpha_s - ctx.prefix[k] - f.beta - eta) +
                 std::exp(-ctx.alpha_s - f.beta);
  for (int i = 0; i < k; ++i) value += f.Rho(ctx.order[i], ctx.s);
  return {value, k};
}

double Phi(const LiftingContext& ctx, double eta) {
  const ExpSetFunction& f = *ctx.f;
  const int m = static_cast<int>(ctx.order.size());
  // Linear bridges across the kinks between consecutive breakpoints; the
  // first interval ends at eta = 0 and has none.
  for (int k = 2; k <= m; ++k) {
    const int a = ctx.order[k - 1];
    const double rho = f.Rho(a, ctx.s);
    const double mu = -std::log(-rho / f.alpha[a]) - ctx.alpha_s - f.beta;
    if (mu - ctx.prefix[k] <= eta && eta <= mu - ctx.prefix[k - 1]) {
      const double end = mu - ctx.prefix[k - 1];
      return Zeta(ctx, end).first + rho * (end - eta) / f.alpha[a];
    }
  }
  return Zeta(ctx, eta).first;
}

std::pair<double, int> Xi(const LiftingContext& ctx, double eta) {
  const ExpSetFunction& f = *ctx.f;
  const int n = static_cast<int>(ctx.order.size());
  int k = 0;
  while (k < n && ctx.prefix[k] < eta) ++k;
  double value = -std::exp(-ctx.alpha_s + ctx.prefix[k] - f.beta - eta) +
                 std::exp(-ctx.alpha_s - f.beta);
  for (int i = 0; i < k; ++i) {
    const int a = ctx.order[i];
    value -= f.Rho(a, Without(ctx.s, a));
  }
  return {value, k};
}

double Psi(const LiftingContext& ctx, double eta) {
  const ExpSetFunction& f = *ctx.f;
  const int n = static_cast<int>(ctx.order.size());
  for (int k = 2; k <= n; ++k) {
    const int a = ctx.order[k - 1];
    const double rho = f.Rho(a, Without(ctx.s, a));
    const double nu = ctx.alpha_s + std::log(-rho / f.alpha[a]) + f.beta;
    if (ctx.prefix[k - 1] - nu <= eta && eta <= ctx.prefix[k] - nu) {
      const double end = ctx.prefix[k] - nu;
      return Xi(ctx, end).first + rho * (end - eta) / f.alpha[a];
    }
  }
  return Xi(ctx, eta).first;
}

double AffineBound::Evaluate(std::span<const double> x) const {
  double total = constant;
  for (const Term& t : terms) total += t.coef * x[t.var];
  return total;
}

AffineBound LiftedBound1(const ExpSetFunction& f, const ArcSet& s) {
  const LiftingContext ctx = LiftingContext::Complement(f, s);
  AffineBound b;
  b.constant = f.Value(s);
  for (int a : f.ground) {
    if (s[a]) {
      const double p = Phi(ctx, -f.alpha[a]);
      b.constant -= p;
      b.terms.push_back({a, p});
    } else {
      b.terms.push_back({a, f.Rho(a, s)});
    }
  }
  return b;
}

AffineBound LiftedBound2(const ExpSetFunction& f, const ArcSet& s) {
  const LiftingContext ctx = LiftingContext::Inside(f, s);
  AffineBound b;
  b.constant = f.Value(s);
  for (int a : f.ground) {
    if (s[a]) {
      const double rho = f.Rho(a, Without(s, a));
      b.constant -= rho;
      b.terms.push_back({a, rho});
    } else {
      b.terms.push_back({a, -Psi(ctx, f.alpha[a])});
    }
  }
  return b;
}

Cut BaseCut9(const PathFunction& pf, const ArcSet& s, int value_var,
             int owner) {
  AffineBound b;
  b.constant = HValue(pf, s);
  const ArcSet all(pf.d_count(), 1);
  for (int a : pf.interdictable()) {
    if (s[a]) {
      const double rho = Rho(pf, a, Without(all, a));
      b.constant -= rho;
      b.terms.push_back({a, rho});
    } else {
      b.terms.push_back({a, Rho(pf, a, s)});
    }
  }
  return ToCut(std::move(b), Provenance::kBase9, ResolveValueVar(pf, value_var),
               owner);
}

Cut BaseCut10(const PathFunction& pf, const ArcSet& s, int value_var,
              int owner) {
  AffineBound b;
  b.constant = HValue(pf, s);
  const ArcSet none = EmptySet(pf);
  for (int a : pf.interdictable()) {
    if (s[a]) {
      const double rho = Rho(pf, a, Without(s, a));
      b.constant -= rho;
      b.terms.push_back({a, rho});
    } else {
      b.terms.push_back({a, Rho(pf, a, none)});
    }
  }
  return ToCut(std::move(b), Provenance::kBase10,
               ResolveValueVar(pf, value_var), owner);
}

Cut LiftedCut1(const PathFunction& pf, const ArcSet& s, int value_var,
               int owner) {
  if (!pf.zero().empty()) {
    throw MixedQError("lifted cut on a path with zero interdicted probability");
  }
  return ToCut(LiftedBound1(pf.whole(), s), Provenance::kLifted1,
               ResolveValueVar(pf, value_var), owner);
}

Cut LiftedCut2(const PathFunction& pf, const ArcSet& s, int value_var,
               int owner) {
  if (!pf.zero().empty()) {
    throw MixedQError("lifted cut on a path with zero interdicted probability");
  }
  return ToCut(LiftedBound2(pf.whole(), s), Provenance::kLifted2,
               ResolveValueVar(pf, value_var), owner);
}

Cut QZeroCut(const PathFunction& pf, int value_var, int owner) {
  if (!pf.plus().empty()) {
    throw NotAllZeroError("path has an interdictable arc with q > 0");
  }
  AffineBound b;
  b.constant = pf.r_path();
  for (int a : pf.interdictable()) b.terms.push_back({a, -pf.r_path()});
  return ToCut(std::move(b), Provenance::kQZero, ResolveValueVar(pf, value_var),
               owner);
}

Cut MixedCut(const PathFunction& pf, const ArcSet& s, LiftedFamily family,
             int value_var, int owner) {
  ArcSet inner = EmptySet(pf);
  for (int a : pf.plus()) inner[a] = s[a];
  const AffineBound inner_bound = family == LiftedFamily::kFirst
                                      ? LiftedBound1(pf.plus_part(), inner)
                                      : LiftedBound2(pf.plus_part(), inner);
  const double scale = pf.r_free() * pf.r_zero();
  AffineBound b;
  b.constant = scale * inner_bound.constant;
  for (const Term& t : inner_bound.terms) {
    b.terms.push_back({t.var, scale * t.coef});
  }
  for (int a : pf.zero()) b.terms.push_back({a, -scale * pf.r_plus()});
  std::sort(b.terms.begin(), b.terms.end(),
            [](const Term& x, const Term& y) { return x.var < y.var; });
  return ToCut(std::move(b), Provenance::kMixed, ResolveValueVar(pf, value_var),
               owner);
}

std::vector<Cut> SeparateInteger(const PathFunction& pf,
                                 std::span<const double> x, double pi,
                                 int value_var, int owner) {
  const ArcSet s = PathSupport(pf, x);
  if (pi >= HValue(pf, s) - kCutViolation) return {};
  std::vector<Cut> candidates;
  if (pf.plus().empty()) {
    candidates.push_back(QZeroCut(pf, value_var, owner));
  } else if (pf.zero().empty()) {
    candidates.push_back(LiftedCut1(pf, s, value_var, owner));
    candidates.push_back(LiftedCut2(pf, s, value_var, owner));
  } else {
    candidates.push_back(MixedCut(pf, s, LiftedFamily::kFirst, value_var, owner));
    candidates.push_back(MixedCut(pf, s, LiftedFamily::kSecond, value_var, owner));
  }
  std::vector<Cut> cuts;
  for (Cut& cut : candidates) {
    if (CutBound(cut, x) - pi > kCutViolation) cuts.push_back(std::move(cut));
  }
  return cuts;
}

double SelectionObjective1(const ExpSetFunction& f, std::span<const double> x,
                           double pi, std::span<const double> z) {
  double u = 0.0;
  for (int k : f.ground) u += f.alpha[k] * z[k];
  const double den = std::max(-std::expm1(-u - f.beta), 1e-12);
  const double h0 = std::exp(-f.beta);
  double value = (1.0 - pi) / den;
  for (int k : f.ground) {
    const double rho0 = h0 * std::expm1(-f.alpha[k]);
    value += rho0 / (h0 + 1.0) * x[k] * (1.0 - z[k]);
  }
  return value;
}

double SelectionObjective2(const ExpSetFunction& f, std::span<const double> x,
                           double pi, std::span<const double> z) {
  double u = 0.0;
  for (int k : f.ground) u += f.alpha[k] * z[k];
  const double den = std::max(-std::expm1(-u - f.beta), 1e-12);
  const double h0 = std::exp(-f.beta);
  double value = (1.0 - pi) / den;
  for (int k : f.ground) {
    const double rho0 = h0 * std::expm1(-f.alpha[k]);
    const double hk = h0 * std::exp(-f.alpha[k]);
    value -= rho0 / (hk + 1.0) * (1.0 - x[k]) * z[k];
  }
  return value;
}

ArcSet SelectSet(const ExpSetFunction& f, std::span<const double> x, double pi,
                 bool second) {
  const size_t d = x.size();
  auto objective = [&](const std::vector<double>& z) {
    return second ? SelectionObjective2(f, x, pi, z)
                  : SelectionObjective1(f, x, pi, z);
  };
  std::vector<double> z(d, 0.0);
  for (int k : f.ground) z[k] = std::clamp(x[k], 0.0, 1.0);

  const double h0 = std::exp(-f.beta);
  double value = objective(z);
  double step = 1.0;
  std::vector<double> grad(d, 0.0);
  std::vector<double> trial(d, 0.0);
  for (int iter = 0; iter < 200; ++iter) {
    double u = 0.0;
    for (int k : f.ground) u += f.alpha[k] * z[k];
    const double e = std::exp(-u - f.beta);
    const double den = -std::expm1(-u - f.beta);
    const double outer = den > 1e-12 ? -(1.0 - pi) * e / (den * den) : 0.0;
    for (int k : f.ground) {
      const double rho0 = h0 * std::expm1(-f.alpha[k]);
      double g = outer * f.alpha[k];
      if (second) {
        g -= rho0 / (h0 * std::exp(-f.alpha[k]) + 1.0) * (1.0 - x[k]);
      } else {
        g -= rho0 / (h0 + 1.0) * x[k];
      }
      grad[k] = g;
    }
    bool moved = false;
    while (step > 1e-12) {
      trial = z;
      double change = 0.0;
      for (int k : f.ground) {
        trial[k] = std::clamp(z[k] + step * grad[k], 0.0, 1.0);
        change += std::abs(trial[k] - z[k]);
      }
      if (change < 1e-12) break;
      const double trial_value = objective(trial);
      if (trial_value > value) {
        z.swap(trial);
        value = trial_value;
        moved = true;
        step *= 2.0;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }

  // Greedy rounding: fix the fractional component whose rounding loses the
  // least objective; ties prefer rounding down, then the lower position.
  for (int k : f.ground) {
    if (z[k] <= 1e-9) z[k] = 0.0;
    if (z[k] >= 1.0 - 1e-9) z[k] = 1.0;
  }
  for (;;) {
    int best_k = -1;
    double best_v = 0.0;
    double best_loss = kInfinity;
    for (int k : f.ground) {
      if (z[k] == 0.0 || z[k] == 1.0) continue;
      const double saved = z[k];
      for (double v : {0.0, 1.0}) {
        z[k] = v;
        const double loss = value - objective(z);
        if (loss < best_loss - 1e-15) {
          best_loss = loss;
          best_k = k;
          best_v = v;
        }
      }
      z[k] = saved;
    }
    if (best_k < 0) break;
    z[best_k] = best_v;
    value = objective(z);
  }
  ArcSet s(d, 0);
  for (int k : f.ground) s[k] = z[k] > 0.5 ? 1 : 0;
  return s;
}

std::vector<Cut> SeparateFractional(const PathFunction& pf,
                                    std::span<const double> x, double pi,
                                    int value_var, int owner) {
  std::vector<Cut> cuts;
  if (pf.plus().empty()) {
    Cut cut = QZeroCut(pf, value_var, owner);
    if (CutBound(cut, x) - pi > kCutViolation) cuts.push_back(std::move(cut));
    return cuts;
  }
  const bool pure = pf.zero().empty();
  const ExpSetFunction& f = pure ? pf.whole() : pf.plus_part();
  double target = pi;
  if (!pure) {
    const double scale = pf.r_free() * pf.r_zero();
    target = pi / scale;
    for (int a : pf.zero()) target += pf.r_plus() * x[a];
  }
  ArcSet rounded = EmptySet(pf);
  for (int a : f.ground) rounded[a] = x[a] >= 0.5 ? 1 : 0;

  for (LiftedFamily family : {LiftedFamily::kFirst, LiftedFamily::kSecond}) {
    const bool second = family == LiftedFamily::kSecond;
    const ArcSet selected = SelectSet(f, x, target, second);
    double best = kCutViolation;
    std::optional<Cut> chosen;
    for (const ArcSet& s : {selected, rounded}) {
      Cut cut = pure ? (second ? LiftedCut2(pf, s, value_var, owner)
                               : LiftedCut1(pf, s, value_var, owner))
                     : MixedCut(pf, s, family, value_var, owner);
      const double violation = CutBound(cut, x) - pi;
      if (violation > best) {
        best = violation;
        chosen = std::move(cut);
      }
    }
    if (chosen) cuts.push_back(std::move(*chosen));
  }
  return cuts;
}

}  // namespace snip
