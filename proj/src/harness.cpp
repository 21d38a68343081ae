#include "isingevo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace isingevo {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string shape(Topology t, int w, int h) {
  if (t == Topology::Ring) return "1d_" + std::to_string(w);
  return "2d_" + std::to_string(w) + "x" + std::to_string(h);
}

bool strictly_increasing(const std::vector<std::int64_t>& v) {
  return std::adjacent_find(v.begin(), v.end(),
                            [](auto a, auto b) { return a >= b; }) == v.end();
}

}  // namespace

std::string algorithm_id(const AlgorithmConfig& config) {
  return std::visit(Overloaded{
                        [](const IsingConfig&) { return std::string("ising"); },
                        [](const CellularConfig&) { return std::string("cellular"); },
                        [](const AnnealingConfig&) { return std::string("annealing"); },
                        [](const MutationConfig&) { return std::string("mutation"); },
                        [](const MixtureConfig&) { return std::string("mixture"); },
                        [](const RandomSearchConfig&) { return std::string("random"); },
                    },
                    config);
}

std::string config_id(const AlgorithmConfig& config) {
  return std::visit(
      Overloaded{
          [](const IsingConfig& c) {
            return shape(c.topology, c.width, c.height) + "_b" + num(c.beta);
          },
          [](const CellularConfig& c) {
            return shape(c.topology, c.width, c.height) + "_p" + num(c.accept_worse_prob);
          },
          [](const AnnealingConfig& c) { return "b0_" + num(c.beta0); },
          [](const MutationConfig& c) { return "std" + num(c.variation.mutation_std); },
          [](const MixtureConfig& c) {
            return "pop" + std::to_string(c.pop_size) + "_keep" + num(c.keep_prob);
          },
          [](const RandomSearchConfig&) { return std::string("uniform"); },
      },
      config);
}

std::vector<std::string> algorithm_ids() {
  return {"ising", "cellular", "annealing", "mutation", "mixture", "random"};
}

AlgorithmConfig make_config(const std::string& algorithm) {
  if (algorithm == "ising") return IsingConfig{};
  if (algorithm == "cellular") return CellularConfig{};
  if (algorithm == "annealing") return AnnealingConfig{};
  if (algorithm == "mutation") return MutationConfig{};
  if (algorithm == "mixture") return MixtureConfig{};
  if (algorithm == "random") return RandomSearchConfig{};
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

RunResult run_algorithm(const AlgorithmConfig& config, BudgetedEvaluator& ev, Rng& rng,
                        const MinimaCatalog* catalog) {
  return std::visit(
      Overloaded{
          [&](const IsingConfig& c) { return run_ising(c, ev, rng, catalog); },
          [&](const CellularConfig& c) { return run_cellular(c, ev, rng, catalog); },
          [&](const AnnealingConfig& c) { return run_sim_annealing(c, ev, rng, catalog); },
          [&](const MutationConfig& c) { return run_mutation(c, ev, rng, catalog); },
          [&](const MixtureConfig& c) { return run_mixture(c, ev, rng, catalog); },
          [&](const RandomSearchConfig& c) { return run_random_search(c, ev, rng, catalog); },
      },
      config);
}

std::vector<std::int64_t> log_checkpoints(int lo_decade, int hi_decade, int per_decade) {
  if (lo_decade > hi_decade || per_decade < 1) {
    throw std::invalid_argument("invalid checkpoint decade range");
  }
  std::vector<std::int64_t> out;
  const int n = (hi_decade - lo_decade) * per_decade;
  for (int k = 0; k <= n; ++k) {
    const double e = lo_decade + static_cast<double>(k) / per_decade;
    const auto v = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

void ExperimentPlan::validate() const {
  objective.validate();
  if (n_runs < 1) throw std::invalid_argument("n_runs must be at least 1");
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (!strictly_increasing(checkpoint_schedule)) {
    throw std::invalid_argument("checkpoint schedule must be strictly increasing");
  }
  if (!checkpoint_schedule.empty() &&
      (checkpoint_schedule.front() < 1 || checkpoint_schedule.back() > budget)) {
    throw std::invalid_argument("checkpoints must lie in [1, budget]");
  }
  std::visit([](const auto& c) { c.validate(); }, algorithm);

  std::int64_t minimum = 1;
  if (const auto* c = std::get_if<IsingConfig>(&algorithm)) {
    minimum = static_cast<std::int64_t>(c->width) * c->height + 1;
  } else if (const auto* c = std::get_if<CellularConfig>(&algorithm)) {
    minimum = static_cast<std::int64_t>(c->width) * c->height + 1;
  } else if (const auto* c = std::get_if<MixtureConfig>(&algorithm)) {
    minimum = c->pop_size + 1;
  }
  if (budget < minimum) {
    throw std::invalid_argument("budget " + std::to_string(budget) + " below the minimum " +
                                std::to_string(minimum) + " for " + algorithm_id(algorithm));
  }
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
  if (values.empty()) return {0.0, 0.0};
  // Sorting first makes the floating-point sums independent of input order.
  std::vector<double> v = values;
  std::sort(v.begin(), v.end());
  const auto n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / n)};
}

AggregateStats aggregate(const std::vector<RunResult>& runs,
                         const std::vector<std::int64_t>& checkpoints) {
  AggregateStats out;
  std::vector<double> values;
  values.reserve(runs.size());
  for (const auto& r : runs) values.push_back(r.best_f);
  std::tie(out.mean_best_f, out.std_best_f) = mean_std(values);

  for (auto cp : checkpoints) {
    values.clear();
    for (const auto& r : runs) values.push_back(r.best_at(cp));
    const auto [m, s] = mean_std(values);
    out.per_checkpoint.push_back({cp, m, s});
  }
  return out;
}

Replication replicate(const ExperimentPlan& plan, const MinimaCatalog* catalog) {
  plan.validate();
  Replication rep{plan, std::vector<RunResult>(static_cast<std::size_t>(plan.n_runs)), {}};

  auto one = [&](int i) {
    BudgetedEvaluator ev(plan.objective, plan.budget);
    Rng rng = make_rng(plan.seed_for(i));
    rep.runs[static_cast<std::size_t>(i)] = run_algorithm(plan.algorithm, ev, rng, catalog);
  };

  const int workers = std::min(plan.threads, plan.n_runs);
  if (workers <= 1) {
    for (int i = 0; i < plan.n_runs; ++i) one(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int i = next++; i < plan.n_runs; i = next++) one(i);
      });
    }
  }

  rep.stats = aggregate(rep.runs, plan.checkpoint_schedule);
  return rep;
}

BudgetSweep budget_sweep(const std::vector<ExperimentPlan>& plans,
                         const MinimaCatalog& catalog, std::size_t n_reference) {
  for (const auto& p : plans) {
    if (p.checkpoint_schedule != plans.front().checkpoint_schedule) {
      throw std::invalid_argument("budget sweep plans must share a checkpoint schedule");
    }
    p.validate();
  }
  BudgetSweep out;
  for (const auto& p : plans) out.curves.push_back(replicate(p, &catalog));
  out.reference = top_k(catalog, std::min(n_reference, catalog.size()));
  return out;
}

std::vector<std::int64_t> PhaseSweepConfig::default_phase_steps() {
  auto steps = log_checkpoints(0, 5, 10);
  steps.insert(steps.begin(), 0);
  return steps;
}

void PhaseSweepConfig::validate() const {
  objective.validate();
  variation.validate();
  if (betas.empty()) throw std::invalid_argument("phase sweep needs at least one beta");
  for (double b : betas) {
    if (!(b >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  }
  if (steps.empty() || steps.front() < 0 || !strictly_increasing(steps)) {
    throw std::invalid_argument("phase steps must be non-negative and strictly increasing");
  }
  for (auto s : snapshot_steps) {
    if (!std::binary_search(steps.begin(), steps.end(), s)) {
      throw std::invalid_argument("snapshot step " + std::to_string(s) +
                                  " is not one of the recorded steps");
    }
  }
  if (n_seeds < 1) throw std::invalid_argument("n_seeds must be at least 1");
  IsingConfig probe{topology, width, height, 1.0, variation};
  probe.validate();
}

double PhaseSweepResult::rel_std_at(double beta, std::int64_t step) const {
  for (const auto& e : entries) {
    if (e.beta == beta && e.step == step) return e.rel_std;
  }
  throw std::out_of_range("no phase entry for beta " + num(beta) + " at step " +
                          std::to_string(step));
}

PhaseSweepResult phase_sweep(const PhaseSweepConfig& config) {
  config.validate();
  const auto cells = static_cast<std::int64_t>(config.width) * config.height;
  const auto budget = cells + std::max<std::int64_t>(config.steps.back(), 1);
  const int dims = static_cast<int>(config.topology);

  PhaseSweepResult out;
  for (double beta : config.betas) {
    std::vector<double> sums(config.steps.size(), 0.0);
    for (int s = 0; s < config.n_seeds; ++s) {
      const IsingConfig cfg{config.topology, config.width, config.height, beta,
                            config.variation};
      BudgetedEvaluator ev(config.objective, budget);
      Rng rng = make_rng(config.seed + static_cast<std::uint64_t>(s));
      std::size_t k = 0;
      LatticeObserver observer{config.steps, [&](std::int64_t step, const LatticeState& st) {
                                 while (config.steps[k] != step) ++k;
                                 sums[k] += relative_std(st);
                                 if (s == 0 && std::find(config.snapshot_steps.begin(),
                                                         config.snapshot_steps.end(),
                                                         step) != config.snapshot_steps.end()) {
                                   out.snapshots.push_back(take_snapshot(st, step, beta));
                                 }
                               }};
      run_ising(cfg, ev, rng, nullptr, &observer);
    }
    for (std::size_t k = 0; k < config.steps.size(); ++k) {
      out.entries.push_back({dims, beta, config.steps[k], sums[k] / config.n_seeds});
    }
  }
  return out;
}

EnsembleCoverage ensemble_coverage(const std::vector<RunResult>& runs,
                                   const MinimaCatalog& catalog, std::size_t k) {
  const auto best = top_k(catalog, k);
  EnsembleCoverage out;
  out.k = static_cast<int>(k);
  double total = 0.0;
  for (const auto& r : runs) {
    int found = 0;
    for (const auto& m : best) {
      if (std::binary_search(r.hits.begin(), r.hits.end(), m.argmin)) ++found;
    }
    out.per_run_found.push_back(found);
    total += found;
  }
  out.mean_found = runs.empty() ? 0.0 : total / static_cast<double>(runs.size());
  return out;
}

EnsembleCoverage ensemble_coverage(const ExperimentPlan& plan, const MinimaCatalog& catalog,
                                   std::size_t k) {
  if (k == 0 || k > catalog.size()) {
    throw std::invalid_argument("ensemble coverage k outside the catalog");
  }
  return ensemble_coverage(replicate(plan, &catalog).runs, catalog, k);
}

}  // namespace isingevo
