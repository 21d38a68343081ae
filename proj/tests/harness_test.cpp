#include "isingevo/harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace isingevo {
namespace {

const MinimaCatalog& catalog() {
  static const MinimaCatalog c = enumerate_local_minima(ObjectiveSpec::benchmark());
  return c;
}

ExperimentPlan small_plan(AlgorithmConfig algo, int runs = 5, std::int64_t budget = 5000) {
  ExperimentPlan p;
  p.algorithm = std::move(algo);
  p.n_runs = runs;
  p.budget = budget;
  p.base_seed = 100;
  p.checkpoint_schedule = log_checkpoints(2, 3, 10);
  p.checkpoint_schedule.push_back(budget);
  return p;
}

TEST(LogCheckpoints, DefaultSchedule) {
  const auto cps = log_checkpoints();
  EXPECT_EQ(cps.front(), 100);
  EXPECT_EQ(cps.back(), 100000);
  EXPECT_EQ(cps.size(), 61u);
  EXPECT_TRUE(std::is_sorted(cps.begin(), cps.end()));
  EXPECT_EQ(std::adjacent_find(cps.begin(), cps.end()), cps.end());
  EXPECT_EQ(cps[20], 1000);
  EXPECT_EQ(cps[1], 112);  // round(10^2.05)
}

TEST(ConfigIds, Names) {
  EXPECT_EQ(algorithm_id(IsingConfig{}), "ising");
  EXPECT_EQ(config_id(IsingConfig{}), "2d_30x30_b100");
  EXPECT_EQ(config_id(IsingConfig{Topology::Ring, 900, 1, 10.0, {}}), "1d_900_b10");
  EXPECT_EQ(config_id(CellularConfig{}), "2d_30x30_p0.1");
  EXPECT_EQ(config_id(MixtureConfig{}), "pop100_keep0.1");
  for (const auto& id : algorithm_ids()) EXPECT_EQ(algorithm_id(make_config(id)), id);
  EXPECT_THROW(make_config("nosuch"), std::invalid_argument);
}

TEST(ExperimentPlan, ValidationBeforeAnyRun) {
  auto p = small_plan(IsingConfig{});
  EXPECT_NO_THROW(p.validate());
  p.n_runs = 0;
  EXPECT_THROW(replicate(p), std::invalid_argument);
  p = small_plan(IsingConfig{}, 2, 900);
  p.checkpoint_schedule = {100};
  EXPECT_THROW(replicate(p), std::invalid_argument);  // budget not above 900 cells
  p = small_plan(RandomSearchConfig{});
  p.checkpoint_schedule = {100, 100};
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.checkpoint_schedule = {100, 6000};
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Replicate, SingleRunHasZeroSpread) {
  const auto rep = replicate(small_plan(MutationConfig{}, 1));
  ASSERT_EQ(rep.runs.size(), 1u);
  EXPECT_EQ(rep.stats.mean_best_f, rep.runs[0].best_f);
  EXPECT_EQ(rep.stats.std_best_f, 0.0);
}

TEST(Replicate, SeedsAreBasePlusIndex) {
  const auto plan = small_plan(AnnealingConfig{}, 3);
  const auto rep = replicate(plan);
  for (int i = 0; i < 3; ++i) {
    BudgetedEvaluator ev(plan.objective, plan.budget);
    Rng rng = make_rng(plan.base_seed + static_cast<std::uint64_t>(i));
    const auto r = run_sim_annealing({}, ev, rng);
    EXPECT_EQ(r.best_f, rep.runs[static_cast<std::size_t>(i)].best_f);
    EXPECT_EQ(r.best_x, rep.runs[static_cast<std::size_t>(i)].best_x);
  }
}

TEST(Replicate, DeterministicAndThreadIndependent) {
  auto plan = small_plan(IsingConfig{Topology::Torus, 10, 10, 100.0, {}}, 6);
  const auto a = replicate(plan, &catalog());
  plan.threads = 3;
  const auto b = replicate(plan, &catalog());
  ASSERT_EQ(a.runs.size(), b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    EXPECT_EQ(a.runs[i].best_f, b.runs[i].best_f);
    EXPECT_EQ(a.runs[i].hits, b.runs[i].hits);
  }
  EXPECT_EQ(a.stats.mean_best_f, b.stats.mean_best_f);
  EXPECT_EQ(a.stats.std_best_f, b.stats.std_best_f);
}

TEST(Aggregate, OrderIndependent) {
  auto runs = replicate(small_plan(MixtureConfig{}, 8)).runs;
  const auto cps = small_plan(MixtureConfig{}).checkpoint_schedule;
  const auto ref = aggregate(runs, cps);
  std::mt19937 shuffle_rng(3);
  for (int n = 0; n < 5; ++n) {
    std::shuffle(runs.begin(), runs.end(), shuffle_rng);
    const auto s = aggregate(runs, cps);
    EXPECT_EQ(s.mean_best_f, ref.mean_best_f);
    EXPECT_EQ(s.std_best_f, ref.std_best_f);
    for (std::size_t k = 0; k < cps.size(); ++k) {
      EXPECT_EQ(s.per_checkpoint[k].mean_best_f, ref.per_checkpoint[k].mean_best_f);
    }
  }
}

TEST(Aggregate, CheckpointMeansNonIncreasing) {
  for (const auto& id : algorithm_ids()) {
    auto cfg = make_config(id);
    if (auto* c = std::get_if<IsingConfig>(&cfg)) c->width = c->height = 10;
    if (auto* c = std::get_if<CellularConfig>(&cfg)) c->width = c->height = 10;
    const auto rep = replicate(small_plan(cfg, 4));
    const auto& pc = rep.stats.per_checkpoint;
    for (std::size_t k = 1; k < pc.size(); ++k) {
      EXPECT_LE(pc[k].mean_best_f, pc[k - 1].mean_best_f) << id;
    }
    EXPECT_EQ(pc.back().mean_best_f, rep.stats.mean_best_f) << id;
  }
}

TEST(MeanStd, PopulationDefinition) {
  const auto [m, s] = mean_std({1.0, 3.0});
  EXPECT_DOUBLE_EQ(m, 2.0);
  EXPECT_DOUBLE_EQ(s, 1.0);
}

TEST(BudgetSweep, SharedScheduleAndReferences) {
  std::vector<ExperimentPlan> plans{small_plan(RandomSearchConfig{}, 3),
                                    small_plan(IsingConfig{Topology::Torus, 10, 10, 100.0, {}}, 3)};
  const auto sweep = budget_sweep(plans, catalog());
  ASSERT_EQ(sweep.curves.size(), 2u);
  ASSERT_EQ(sweep.reference.size(), 3u);
  EXPECT_EQ(sweep.reference[0].argmin, 84822);

  plans[1].checkpoint_schedule.pop_back();
  EXPECT_THROW(budget_sweep(plans, catalog()), std::invalid_argument);
}

TEST(PhaseSweep, RecordsEveryBetaAndStep) {
  PhaseSweepConfig cfg;
  cfg.betas = {1.0, 100.0};
  cfg.steps = {0, 10, 100, 1000};
  cfg.snapshot_steps = {0, 1000};
  cfg.width = cfg.height = 10;
  const auto res = phase_sweep(cfg);
  ASSERT_EQ(res.entries.size(), 8u);
  ASSERT_EQ(res.snapshots.size(), 4u);
  for (const auto& e : res.entries) {
    EXPECT_GE(e.rel_std, 0.0);
    EXPECT_LE(e.rel_std, 0.5);
    EXPECT_EQ(e.dims, 2);
  }
  EXPECT_EQ(res.snapshots[1].step, 1000);
  EXPECT_EQ(res.snapshots[1].cells.size(), 100u);
  EXPECT_THROW(res.rel_std_at(3.0, 0), std::out_of_range);
}

TEST(PhaseSweep, StartsFromUniformSpread) {
  PhaseSweepConfig cfg;
  cfg.betas = {0.1, 1.0, 10.0, 100.0};
  cfg.steps = {0, 1};
  cfg.snapshot_steps = {};
  cfg.n_seeds = 4;
  const auto res = phase_sweep(cfg);
  for (double b : cfg.betas) {
    EXPECT_NEAR(res.rel_std_at(b, 0), 1.0 / std::sqrt(12.0), 0.015) << b;
  }
}

TEST(PhaseSweep, RejectsBadSchedules) {
  PhaseSweepConfig cfg;
  cfg.steps = {10, 5};
  EXPECT_THROW(phase_sweep(cfg), std::invalid_argument);
  cfg.steps = {0, 10};
  cfg.snapshot_steps = {7};
  EXPECT_THROW(phase_sweep(cfg), std::invalid_argument);
}

TEST(EnsembleCoverage, CountsTopKHitsPerRun) {
  RunResult a;
  a.hits = {13822, 84822, 99999};
  RunResult b;
  b.hits = {};
  const auto cov = ensemble_coverage(std::vector<RunResult>{a, b}, catalog(), 10);
  EXPECT_EQ(cov.per_run_found, (std::vector<int>{2, 0}));
  EXPECT_DOUBLE_EQ(cov.mean_found, 1.0);
  const auto top1 = ensemble_coverage(std::vector<RunResult>{a}, catalog(), 1);
  EXPECT_EQ(top1.per_run_found.front(), 1);
}

TEST(EnsembleCoverage, BoundedAndReproducible) {
  const auto plan = small_plan(RandomSearchConfig{}, 5, 20000);
  const auto a = ensemble_coverage(plan, catalog(), 10);
  const auto b = ensemble_coverage(plan, catalog(), 10);
  EXPECT_EQ(a.per_run_found, b.per_run_found);
  for (int f : a.per_run_found) {
    EXPECT_GE(f, 0);
    EXPECT_LE(f, 10);
  }
  EXPECT_THROW(ensemble_coverage(plan, catalog(), 319), std::invalid_argument);
}

}  // namespace
}  // namespace isingevo
