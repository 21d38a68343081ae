#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isingevo/lattice.hpp"
#include "isingevo/objective.hpp"
#include "isingevo/random.hpp"
#include "isingevo/variation.hpp"

namespace isingevo {

/// Metropolis-style acceptance at inverse temperature beta.
struct AcceptanceRule {
  double beta = 100.0;
};

/// 1 if old > new, otherwise min(1, exp(beta * (old - new))).
double acceptance_probability(double old_value, double new_value,
                              const AcceptanceRule& rule) noexcept;

struct TracePoint {
  std::int64_t eval_index = 0;  // 1-based count of evaluations consumed
  double best_f = 0.0;
};

struct RunResult {
  std::int64_t best_x = 0;
  double best_f = 0.0;
  std::int64_t evals_used = 0;
  // One point per improvement of the best-so-far value, in evaluation order.
  std::vector<TracePoint> trace;
  // Sorted, unique catalog argmins that were evaluated during the run.
  std::vector<std::int64_t> hits;

  /// Best-so-far value after eval_index evaluations. Returns +inf before the
  /// first trace point.
  double best_at(std::int64_t eval_index) const noexcept;
};

struct IsingConfig {
  Topology topology = Topology::Torus;
  int width = 30;
  int height = 30;
  double beta = 100.0;
  VariationParams variation;

  void validate() const;
};

struct CellularConfig {
  Topology topology = Topology::Torus;
  int width = 30;
  int height = 30;
  double accept_worse_prob = 0.10;
  VariationParams variation;

  void validate() const;
};

struct AnnealingConfig {
  double beta0 = 1.0;
  VariationParams variation;

  void validate() const;
};

struct MutationConfig {
  VariationParams variation;

  void validate() const;
};

struct MixtureConfig {
  int pop_size = 100;
  double keep_prob = 0.10;

  void validate() const;
};

struct RandomSearchConfig {
  void validate() const {}
};

/// Hook into a lattice run. on_step is called with the number of update
/// steps completed (0 = right after initialization) for every value listed in
/// steps, which must be strictly increasing.
struct LatticeObserver {
  std::vector<std::int64_t> steps;
  std::function<void(std::int64_t step, const LatticeState& state)> on_step;
};

// All runners consume the evaluator until it is exhausted. The catalog, when
// given, is used to record which exact minima were evaluated (RunResult::hits).

RunResult run_ising(const IsingConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                    const MinimaCatalog* catalog = nullptr,
                    const LatticeObserver* observer = nullptr);

RunResult run_cellular(const CellularConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                       const MinimaCatalog* catalog = nullptr);

/// Inverse temperature of the annealing schedule at 1-based update step i.
double annealing_beta(double beta0, std::int64_t step) noexcept;

/// Single-candidate annealing with beta = beta0 * sqrt(i) at update step i.
RunResult run_sim_annealing(const AnnealingConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                            const MinimaCatalog* catalog = nullptr);

RunResult run_mutation(const MutationConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                       const MinimaCatalog* catalog = nullptr);

/// Same as above but starting from a given point instead of a uniform draw.
/// The start still costs one evaluation.
RunResult run_mutation_from(std::int64_t start, const MutationConfig& cfg,
                            BudgetedEvaluator& ev, Rng& rng,
                            const MinimaCatalog* catalog = nullptr);

RunResult run_mixture(const MixtureConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                      const MinimaCatalog* catalog = nullptr);

/// Mixture run from an explicit initial population (each member costs one
/// evaluation).
RunResult run_mixture_from(std::vector<std::int64_t> population, const MixtureConfig& cfg,
                           BudgetedEvaluator& ev, Rng& rng,
                           const MinimaCatalog* catalog = nullptr);

RunResult run_random_search(const RandomSearchConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                            const MinimaCatalog* catalog = nullptr);

}  // namespace isingevo
