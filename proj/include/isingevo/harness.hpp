#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "isingevo/lattice.hpp"
#include "isingevo/objective.hpp"
#include "isingevo/optimizers.hpp"

namespace isingevo {

using AlgorithmConfig = std::variant<IsingConfig, CellularConfig, AnnealingConfig,
                                     MutationConfig, MixtureConfig, RandomSearchConfig>;

/// Short algorithm name: ising, cellular, annealing, mutation, mixture, random.
std::string algorithm_id(const AlgorithmConfig& config);

/// Compact label of the hyperparameters, e.g. "2d_30x30_b100".
std::string config_id(const AlgorithmConfig& config);

/// Algorithm names accepted by make_config.
std::vector<std::string> algorithm_ids();

/// Default-constructed configuration for a named algorithm. Throws
/// std::invalid_argument for an unknown name.
AlgorithmConfig make_config(const std::string& algorithm);

/// Runs one optimizer against ev with the given RNG.
RunResult run_algorithm(const AlgorithmConfig& config, BudgetedEvaluator& ev, Rng& rng,
                        const MinimaCatalog* catalog = nullptr);

/// round(10^(lo_decade + k / per_decade)) for k = 0.. up to hi_decade,
/// deduplicated. The default is 20 points per decade over [1e2, 1e5].
std::vector<std::int64_t> log_checkpoints(int lo_decade = 2, int hi_decade = 5,
                                          int per_decade = 20);

struct ExperimentPlan {
  AlgorithmConfig algorithm = IsingConfig{};
  ObjectiveSpec objective;
  int n_runs = 100;
  std::int64_t budget = 100000;
  std::uint64_t base_seed = 0;
  std::vector<std::int64_t> checkpoint_schedule = log_checkpoints();
  // Worker threads for independent runs; results do not depend on it.
  int threads = 1;

  /// Throws std::invalid_argument on an inconsistent plan.
  void validate() const;
  std::uint64_t seed_for(int run_index) const noexcept {
    return base_seed + static_cast<std::uint64_t>(run_index);
  }
};

struct CheckpointStat {
  std::int64_t eval_index = 0;
  double mean_best_f = 0.0;
  double std_best_f = 0.0;
};

struct AggregateStats {
  double mean_best_f = 0.0;
  double std_best_f = 0.0;  // population standard deviation over runs
  std::vector<CheckpointStat> per_checkpoint;
};

struct Replication {
  ExperimentPlan plan;
  std::vector<RunResult> runs;  // indexed by run, seed = plan.seed_for(index)
  AggregateStats stats;
};

/// Mean and population standard deviation.
std::pair<double, double> mean_std(const std::vector<double>& values);

/// Aggregates finished runs. The result does not depend on run order.
AggregateStats aggregate(const std::vector<RunResult>& runs,
                         const std::vector<std::int64_t>& checkpoints);

/// Runs the plan's optimizer n_runs times, seed base_seed + i, fresh budget each.
Replication replicate(const ExperimentPlan& plan, const MinimaCatalog* catalog = nullptr);

struct BudgetSweep {
  std::vector<Replication> curves;
  // Values of the catalog's lowest minima, as horizontal references.
  std::vector<LocalMinimum> reference;
};

/// Replicates every plan; all plans must share one checkpoint schedule.
BudgetSweep budget_sweep(const std::vector<ExperimentPlan>& plans,
                         const MinimaCatalog& catalog, std::size_t n_reference = 3);

struct PhaseSweepConfig {
  std::vector<double> betas{0.1, 1.0, 10.0, 100.0};
  // Update steps after initialization at which rel_std is recorded.
  std::vector<std::int64_t> steps = default_phase_steps();
  // Subset of steps at which full lattice snapshots are kept (first seed only).
  std::vector<std::int64_t> snapshot_steps{0, 1000, 10000, 100000};
  Topology topology = Topology::Torus;
  int width = 30;
  int height = 30;
  VariationParams variation;
  ObjectiveSpec objective;
  std::uint64_t seed = 0;
  int n_seeds = 1;  // rel_std is averaged over seeds seed, seed+1, ...

  void validate() const;

  /// 0 followed by 10 log-spaced points per decade up to 1e5.
  static std::vector<std::int64_t> default_phase_steps();
};

struct PhaseEntry {
  int dims = 2;
  double beta = 0.0;
  std::int64_t step = 0;
  double rel_std = 0.0;
};

struct PhaseSweepResult {
  std::vector<PhaseEntry> entries;  // grouped by beta, steps ascending
  std::vector<Snapshot> snapshots;

  /// rel_std recorded for (beta, step). Throws std::out_of_range if absent.
  double rel_std_at(double beta, std::int64_t step) const;
};

/// One Ising run per (beta, seed) with budget width * height + max(steps).
PhaseSweepResult phase_sweep(const PhaseSweepConfig& config);

struct EnsembleCoverage {
  int k = 10;
  std::vector<int> per_run_found;
  double mean_found = 0.0;
};

/// Counts, per run, how many of the k lowest catalog argmins the run evaluated.
EnsembleCoverage ensemble_coverage(const std::vector<RunResult>& runs,
                                   const MinimaCatalog& catalog, std::size_t k = 10);
EnsembleCoverage ensemble_coverage(const ExperimentPlan& plan, const MinimaCatalog& catalog,
                                   std::size_t k = 10);

}  // namespace isingevo
