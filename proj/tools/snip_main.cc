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

// snip: solve, generate and benchmark stochastic network interdiction
// instances.

#include <glob.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "snip/errors.h"
#include "snip/instance.h"
#include "snip/report.h"
#include "snip/solver.h"

namespace {

using snip::Algorithm;
using snip::SigmaMode;
using snip::SolveOptions;
using snip::SubproblemMethod;

constexpr int kExitOptimal = 0;
constexpr int kExitError = 1;
constexpr int kExitLimit = 2;

std::vector<std::string> Glob(const std::string& pattern) {
  glob_t g{};
  std::vector<std::string> out;
  if (::glob(pattern.c_str(), 0, nullptr, &g) == 0) {
    for (size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
  }
  ::globfree(&g);
  return out;
}

// Writes to --out when given, standard output otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw snip::IoError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct CommonFlags {
  std::string alg = "path";
  double gap = 1e-4;
  double time_limit = 3600.0;
  std::string frac_sigma = "convex";
  std::string subproblem = "dp";
  std::string out;
  bool no_times = false;

  SolveOptions Options() const {
    SolveOptions o;
    o.gap_tolerance = gap;
    o.time_limit = time_limit;
    o.sigma_mode = *snip::ParseSigmaMode(frac_sigma);
    o.subproblem =
        subproblem == "lp" ? SubproblemMethod::kLp : SubproblemMethod::kDp;
    return o;
  }
};

void AddSolveFlags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--gap", f.gap, "relative gap tolerance")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--time-limit", f.time_limit, "time limit in seconds")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--frac-sigma", f.frac_sigma,
                  "PATH reliabilities at fractional points")
      ->check(CLI::IsMember({"convex", "power", "both"}));
  cmd->add_option("--subproblem", f.subproblem, "BEN scenario subproblem")
      ->check(CLI::IsMember({"dp", "lp"}));
  cmd->add_option("--out", f.out, "write the report here");
  cmd->add_flag("--no-times", f.no_times, "print '-' for time columns");
}

std::string InstanceName(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int RunSolve(const std::string& path, const CommonFlags& f, bool header) {
  const snip::Instance instance = snip::LoadInstance(path);
  const Algorithm alg = *snip::ParseAlgorithm(f.alg);
  const snip::SolveResult result = snip::Solve(instance, alg, f.Options());
  Output out(f.out);
  if (header) out.stream() << snip::RowHeader() << '\n';
  out.stream() << snip::FormatRow(
                      snip::MakeRow(InstanceName(path), f.alg, result),
                      !f.no_times)
               << '\n';
  switch (result.status) {
    case snip::SolveStatus::kOptimal:
      return kExitOptimal;
    case snip::SolveStatus::kLimitReached:
      return kExitLimit;
    case snip::SolveStatus::kInfeasible:
      break;
  }
  return kExitError;
}

struct GenerateFlags {
  snip::GeneratorParams params;
  std::string regime = "factor";
  std::string out;
};

int RunGenerate(GenerateFlags& g) {
  if (g.regime == "zero") {
    g.params.regime = snip::QRegime::kZero;
  } else if (g.regime == "mixed") {
    g.params.regime = snip::QRegime::kMixed;
  } else {
    g.params.regime = snip::QRegime::kFactor;
  }
  const snip::Instance instance = snip::GenerateInstance(g.params);
  Output out(g.out);
  snip::SaveInstance(instance, out.stream());
  return kExitOptimal;
}

struct BenchFlags {
  std::vector<std::string> patterns;
  std::vector<std::string> algs = {"def", "cdef", "benders", "path"};
  std::vector<double> budgets;
  int jobs = 1;
};

struct BenchJob {
  std::string path;
  std::string name;
  double budget = 0.0;
  std::string alg;
  std::string group;
};

snip::RunRow RunJob(const BenchJob& job, const SolveOptions& options) {
  try {
    snip::Instance instance = snip::LoadInstance(job.path);
    if (job.budget > 0.0) instance.budget = job.budget;
    return snip::MakeRow(job.name, job.alg,
                         snip::Solve(instance, *snip::ParseAlgorithm(job.alg),
                                     options));
  } catch (const std::exception& e) {
    snip::RunRow row;
    row.instance = job.name;
    row.algorithm = job.alg;
    row.status = "error";
    row.message = e.what();
    return row;
  }
}

std::string BudgetLabel(double b) {
  std::ostringstream s;
  s << b;
  return s.str();
}

int RunBench(const BenchFlags& b, const CommonFlags& f) {
  std::vector<std::string> paths;
  for (const std::string& p : b.patterns) {
    for (std::string& m : Glob(p)) paths.push_back(std::move(m));
  }
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

  std::vector<BenchJob> jobs;
  const std::vector<double> budgets =
      b.budgets.empty() ? std::vector<double>{0.0} : b.budgets;
  for (const std::string& path : paths) {
    for (double budget : budgets) {
      std::string name = InstanceName(path);
      if (budget > 0.0) name += "@b=" + BudgetLabel(budget);
      for (const std::string& alg : b.algs) {
        jobs.push_back({path, name, budget, alg,
                        budget > 0.0 ? BudgetLabel(budget) : "all"});
      }
    }
  }

  // Parallelism is per instance: a worker takes all jobs of one instance.
  const SolveOptions options = f.Options();
  std::vector<snip::RunRow> rows(jobs.size());
  std::vector<size_t> starts;
  for (size_t i = 0; i < jobs.size(); ++i) {
    if (i == 0 || jobs[i].name != jobs[i - 1].name) starts.push_back(i);
  }
  starts.push_back(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) + 1 < starts.size();) {
      for (size_t i = starts[k]; i < starts[k + 1]; ++i) {
        rows[i] = RunJob(jobs[i], options);
      }
    }
  };
  const int threads = std::max(1, b.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  Output out(f.out);
  std::ostream& os = out.stream();
  os << snip::RowHeader() << '\n';
  for (const snip::RunRow& row : rows) {
    os << snip::FormatRow(row, !f.no_times) << '\n';
    if (row.status == "error") {
      std::cerr << row.instance << ' ' << row.algorithm << ": " << row.message
                << '\n';
    }
  }
  if (!rows.empty()) {
    std::vector<std::string> groups;
    for (const BenchJob& j : jobs) groups.push_back(j.group);
    os << '\n';
    snip::WriteSummaryTable(os, rows, groups, b.algs);
  }
  const auto disagreements = snip::CheckAgreement(rows, f.gap);
  for (const auto& d : disagreements) {
    std::cerr << "objective mismatch on " << d.instance << ": " << d.first
              << '=' << d.first_objective << ' ' << d.second << '='
              << d.second_objective << '\n';
  }
  return disagreements.empty() ? kExitOptimal : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic network interdiction solver"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::string instance_path;
  bool header = false;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--alg", solve_flags.alg, "def, cdef, benders or path")
      ->check(CLI::IsMember({"def", "cdef", "benders", "path"}));
  solve->add_option("--instance", instance_path, "instance document")
      ->required();
  solve->add_flag("--header", header, "print the column header first");
  AddSolveFlags(solve, solve_flags);

  GenerateFlags gen;
  CLI::App* generate = app.add_subcommand("generate", "generate an instance");
  generate->add_option("--rows", gen.params.rows, "grid rows");
  generate->add_option("--cols", gen.params.cols, "grid columns");
  generate->add_option("--interdictable", gen.params.interdictable_fraction,
                       "fraction of interdictable arcs");
  generate->add_option("--regime", gen.regime, "q regime")
      ->check(CLI::IsMember({"factor", "zero", "mixed"}));
  generate->add_option("--kappa", gen.params.kappa, "q = kappa * r");
  generate->add_option("--scenarios", gen.params.scenario_count,
                       "number of scenarios");
  generate->add_option("--destinations", gen.params.destination_pool,
                       "distinct destinations (0: unrestricted)");
  generate->add_option("--budget", gen.params.budget, "interdiction budget");
  generate->add_option("--seed", gen.params.seed, "random seed");
  generate->add_option("--out", gen.out, "output file");

  CommonFlags bench_flags;
  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run a comparison");
  bench_cmd->add_option("--instances", bench.patterns, "instance globs");
  bench_cmd->add_option("--algs", bench.algs, "algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember({"def", "cdef", "benders", "path"}));
  bench_cmd->add_option("--budgets", bench.budgets, "budget sweep")
      ->delimiter(',');
  bench_cmd->add_option("--jobs", bench.jobs, "instances solved in parallel")
      ->check(CLI::PositiveNumber);
  AddSolveFlags(bench_cmd, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve) return RunSolve(instance_path, solve_flags, header);
    if (*generate) return RunGenerate(gen);
    if (*bench_cmd) return RunBench(bench, bench_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
