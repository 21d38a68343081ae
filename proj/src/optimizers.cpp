#include "isingevo/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace isingevo {

double acceptance_probability(double old_value, double new_value,
                              const AcceptanceRule& rule) noexcept {
  if (old_value > new_value) return 1.0;
  return std::min(1.0, std::exp(rule.beta * (old_value - new_value)));
}

double annealing_beta(double beta0, std::int64_t step) noexcept {
  return beta0 * std::sqrt(static_cast<double>(step));
}

double RunResult::best_at(std::int64_t eval_index) const noexcept {
  auto it = std::upper_bound(
      trace.begin(), trace.end(), eval_index,
      [](std::int64_t idx, const TracePoint& p) { return idx < p.eval_index; });
  if (it == trace.begin()) return std::numeric_limits<double>::infinity();
  return std::prev(it)->best_f;
}

namespace {

void check_lattice_shape(Topology topology, int width, int height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("lattice width and height must be positive");
  }
  if (topology == Topology::Ring && height != 1) {
    throw std::invalid_argument("a 1D ring lattice must have height 1");
  }
  if (static_cast<std::int64_t>(width) * height < 2) {
    throw std::invalid_argument("lattice needs at least 2 sites");
  }
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

void require_budget(const BudgetedEvaluator& ev, std::int64_t needed, const char* what) {
  if (ev.remaining() < needed) {
    throw BudgetExhausted(std::string(what) + " needs at least " + std::to_string(needed) +
                          " evaluations, " + std::to_string(ev.remaining()) + " remaining");
  }
}

// Evaluates through the budget, records catalog hits and keeps the
// best-so-far value together with its improvement trace.
class Tracker {
 public:
  Tracker(BudgetedEvaluator& ev, const MinimaCatalog* catalog) : ev_(ev), catalog_(catalog) {}

  double evaluate(std::int64_t x) {
    const double v = ev_.evaluate(x);
    if (catalog_ != nullptr && catalog_->is_argmin(x)) result_.hits.push_back(x);
    return v;
  }

  void offer(std::int64_t x, double v) {
    if (v < result_.best_f) {
      result_.best_x = x;
      result_.best_f = v;
      result_.trace.push_back({ev_.used(), v});
    }
  }

  RunResult finish() {
    auto& hits = result_.hits;
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    result_.evals_used = ev_.used();
    return std::move(result_);
  }

 private:
  BudgetedEvaluator& ev_;
  const MinimaCatalog* catalog_;
  RunResult result_{0, std::numeric_limits<double>::infinity(), 0, {}, {}};
};

// Shared lattice loop. accept(old, new, rng) decides whether a proposal
// replaces the site; the global best only moves on accepted proposals.
template <class Accept>
RunResult run_lattice(Topology topology, int width, int height,
                      const VariationParams& variation, Accept accept,
                      BudgetedEvaluator& ev, Rng& rng, const MinimaCatalog* catalog,
                      const LatticeObserver* observer) {
  const auto n = static_cast<std::int64_t>(width) * height;
  require_budget(ev, n + 1, "lattice run");

  Tracker tracker(ev, catalog);
  LatticeState state(topology, width, height, ev.spec());
  const auto& domain = ev.spec();
  for (int i = 0; i < width; ++i) {
    for (int j = 0; j < height; ++j) {
      const auto x = uniform_int(rng, domain.lo, domain.hi);
      const double v = tracker.evaluate(x);
      state.set({i, j}, x, v);
      tracker.offer(x, v);
    }
  }

  std::size_t next_obs = 0;
  auto notify = [&](std::int64_t step) {
    if (observer == nullptr) return;
    while (next_obs < observer->steps.size() && observer->steps[next_obs] < step) ++next_obs;
    if (next_obs < observer->steps.size() && observer->steps[next_obs] == step) {
      observer->on_step(step, state);
      ++next_obs;
    }
  };
  notify(0);

  std::int64_t step = 0;
  while (!ev.exhausted()) {
    const Site site = pick_site(state, rng);
    const Site nb = pick_neighbor(state, site, rng);
    const auto test = propose(state.cell(site), state.cell(nb), variation, rng, domain);
    const double q = tracker.evaluate(test);
    if (accept(state.qual(site), q, rng)) {
      state.set(site, test, q);
      tracker.offer(test, q);
    }
    notify(++step);
  }
  return tracker.finish();
}

}  // namespace

void IsingConfig::validate() const {
  check_lattice_shape(topology, width, height);
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  variation.validate();
}

void CellularConfig::validate() const {
  check_lattice_shape(topology, width, height);
  check_probability(accept_worse_prob, "accept_worse_prob");
  variation.validate();
}

void AnnealingConfig::validate() const {
  if (!(beta0 >= 0.0) || !std::isfinite(beta0)) {
    throw std::invalid_argument("beta0 must be a non-negative finite number");
  }
  variation.validate();
}

void MutationConfig::validate() const { variation.validate(); }

void MixtureConfig::validate() const {
  if (pop_size < 2) throw std::invalid_argument("mixture population needs at least 2 members");
  check_probability(keep_prob, "keep_prob");
}

RunResult run_ising(const IsingConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                    const MinimaCatalog* catalog, const LatticeObserver* observer) {
  cfg.validate();
  const AcceptanceRule rule{cfg.beta};
  auto accept = [rule](double old_q, double new_q, Rng& r) {
    return uniform01(r) < acceptance_probability(old_q, new_q, rule);
  };
  return run_lattice(cfg.topology, cfg.width, cfg.height, cfg.variation, accept, ev, rng,
                     catalog, observer);
}

RunResult run_cellular(const CellularConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                       const MinimaCatalog* catalog) {
  cfg.validate();
  const double worse = cfg.accept_worse_prob;
  auto accept = [worse](double old_q, double new_q, Rng& r) {
    return uniform01(r) < (new_q < old_q ? 1.0 : worse);
  };
  return run_lattice(cfg.topology, cfg.width, cfg.height, cfg.variation, accept, ev, rng,
                     catalog, nullptr);
}

RunResult run_sim_annealing(const AnnealingConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                            const MinimaCatalog* catalog) {
  cfg.validate();
  require_budget(ev, 1, "simulated annealing");
  Tracker tracker(ev, catalog);
  const auto& domain = ev.spec();

  auto x = uniform_int(rng, domain.lo, domain.hi);
  double fx = tracker.evaluate(x);
  tracker.offer(x, fx);

  for (std::int64_t i = 1; !ev.exhausted(); ++i) {
    const auto y = normal_step(x, cfg.variation, rng, domain);
    const double fy = tracker.evaluate(y);
    const AcceptanceRule rule{annealing_beta(cfg.beta0, i)};
    if (uniform01(rng) < acceptance_probability(fx, fy, rule)) {
      x = y;
      fx = fy;
      tracker.offer(x, fx);
    }
  }
  return tracker.finish();
}

RunResult run_mutation_from(std::int64_t start, const MutationConfig& cfg,
                            BudgetedEvaluator& ev, Rng& rng, const MinimaCatalog* catalog) {
  cfg.validate();
  require_budget(ev, 1, "mutation run");
  Tracker tracker(ev, catalog);
  const auto& domain = ev.spec();

  auto x = start;
  double fx = tracker.evaluate(x);
  tracker.offer(x, fx);

  while (!ev.exhausted()) {
    const auto y = normal_step(x, cfg.variation, rng, domain);
    const double fy = tracker.evaluate(y);
    if (fy < fx) {
      x = y;
      fx = fy;
      tracker.offer(x, fx);
    }
  }
  return tracker.finish();
}

RunResult run_mutation(const MutationConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                       const MinimaCatalog* catalog) {
  cfg.validate();
  require_budget(ev, 1, "mutation run");
  const auto start = uniform_int(rng, ev.spec().lo, ev.spec().hi);
  return run_mutation_from(start, cfg, ev, rng, catalog);
}

RunResult run_mixture_from(std::vector<std::int64_t> population, const MixtureConfig& cfg,
                           BudgetedEvaluator& ev, Rng& rng, const MinimaCatalog* catalog) {
  cfg.validate();
  const auto n = static_cast<std::int64_t>(population.size());
  if (n < 2) throw std::invalid_argument("mixture population needs at least 2 members");
  require_budget(ev, n + 1, "mixture run");

  Tracker tracker(ev, catalog);
  std::vector<double> quals(population.size());
  for (std::size_t k = 0; k < population.size(); ++k) {
    quals[k] = tracker.evaluate(population[k]);
    tracker.offer(population[k], quals[k]);
  }

  while (!ev.exhausted()) {
    const auto a = static_cast<std::size_t>(uniform_int(rng, 0, n));
    auto b = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
    if (b >= a) ++b;

    const auto child = average_mix(population[a], population[b]);
    const double fc = tracker.evaluate(child);

    std::size_t slot;
    if (fc < std::max(quals[a], quals[b])) {
      slot = quals[a] >= quals[b] ? a : b;
    } else if (uniform01(rng) < cfg.keep_prob) {
      slot = uniform_int(rng, 0, 2) == 0 ? a : b;
    } else {
      continue;
    }
    population[slot] = child;
    quals[slot] = fc;
    tracker.offer(child, fc);
  }
  return tracker.finish();
}

RunResult run_mixture(const MixtureConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                      const MinimaCatalog* catalog) {
  cfg.validate();
  require_budget(ev, static_cast<std::int64_t>(cfg.pop_size) + 1, "mixture run");
  const auto& domain = ev.spec();
  std::vector<std::int64_t> population(static_cast<std::size_t>(cfg.pop_size));
  for (auto& x : population) x = uniform_int(rng, domain.lo, domain.hi);
  return run_mixture_from(std::move(population), cfg, ev, rng, catalog);
}

RunResult run_random_search(const RandomSearchConfig& cfg, BudgetedEvaluator& ev, Rng& rng,
                            const MinimaCatalog* catalog) {
  cfg.validate();
  require_budget(ev, 1, "random search");
  Tracker tracker(ev, catalog);
  const auto& domain = ev.spec();
  while (!ev.exhausted()) {
    const auto x = uniform_int(rng, domain.lo, domain.hi);
    tracker.offer(x, tracker.evaluate(x));
  }
  return tracker.finish();
}

}  // namespace isingevo
