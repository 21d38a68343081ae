#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "isingevo/csv.hpp"
#include "isingevo/harness.hpp"
#include "isingevo/optimizers.hpp"

namespace py = pybind11;
using namespace isingevo;

namespace {

template <class Config, class Runner>
void def_runner(py::module_& m, const char* name, Runner runner, const char* doc) {
  m.def(
      name,
      [runner](const Config& cfg, BudgetedEvaluator& ev, std::uint64_t seed,
               const MinimaCatalog* catalog) {
        Rng rng = make_rng(seed);
        return runner(cfg, ev, rng, catalog);
      },
      py::arg("config"), py::arg("evaluator"), py::arg("seed"), py::arg("catalog") = nullptr,
      doc);
}

template <class Fn>
std::string to_text(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ising-model evolutionary optimization and baselines";
  m.attr("__version__") = "0.1.0";

  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
  py::register_exception<DomainViolation>(m, "DomainViolation", PyExc_ValueError);

  // objective
  m.def("raw_value", &raw_value, py::arg("x"), "|sin((x + 1) / 100)|");

  py::class_<ObjectiveSpec>(m, "ObjectiveSpec")
      .def(py::init([](std::int64_t lo, std::int64_t hi, std::string id) {
             ObjectiveSpec s{lo, hi, std::move(id)};
             s.validate();
             return s;
           }),
           py::arg("lo") = 0, py::arg("hi") = 100000, py::arg("id") = "abs_sin_100")
      .def_readonly("lo", &ObjectiveSpec::lo)
      .def_readonly("hi", &ObjectiveSpec::hi)
      .def_readonly("id", &ObjectiveSpec::id)
      .def("contains", &ObjectiveSpec::contains);

  py::class_<BudgetedEvaluator>(m, "BudgetedEvaluator")
      .def(py::init<ObjectiveSpec, std::int64_t>(), py::arg("spec"), py::arg("budget"))
      .def("evaluate", &BudgetedEvaluator::evaluate, py::arg("x"))
      .def_property_readonly("budget", &BudgetedEvaluator::budget)
      .def_property_readonly("used", &BudgetedEvaluator::used)
      .def_property_readonly("remaining", &BudgetedEvaluator::remaining);

  py::class_<LocalMinimum>(m, "LocalMinimum")
      .def_readonly("argmin", &LocalMinimum::argmin)
      .def_readonly("value", &LocalMinimum::value)
      .def_readonly("rank", &LocalMinimum::rank)
      .def("__repr__", [](const LocalMinimum& lm) {
        return "LocalMinimum(rank=" + std::to_string(lm.rank) +
               ", argmin=" + std::to_string(lm.argmin) + ", value=" + csv::format_real(lm.value) +
               ")";
      });

  py::class_<MinimaCatalog>(m, "MinimaCatalog")
      .def("__len__", &MinimaCatalog::size)
      .def("__getitem__",
           [](const MinimaCatalog& c, std::size_t i) {
             if (i >= c.size()) throw py::index_error();
             return c[i];
           })
      .def_property_readonly("minima",
                             [](const MinimaCatalog& c) {
                               return std::vector<LocalMinimum>(c.minima().begin(),
                                                                c.minima().end());
                             })
      .def("is_argmin", &MinimaCatalog::is_argmin)
      .def("to_csv", [](const MinimaCatalog& c) {
        return to_text([&](std::ostream& os) { csv::write_oracle(os, c); });
      });

  m.def("enumerate_local_minima", &enumerate_local_minima,
        py::arg("spec") = ObjectiveSpec::benchmark());
  m.def("mean_minimum_value", &mean_minimum_value);
  m.def("top_k", &top_k, py::arg("catalog"), py::arg("k"));

  // variation
  py::class_<VariationParams>(m, "VariationParams")
      .def(py::init([](double std, double mix) { return VariationParams{std, mix}; }),
           py::arg("mutation_std") = 100.0, py::arg("mix_probability") = 0.5)
      .def_readwrite("mutation_std", &VariationParams::mutation_std)
      .def_readwrite("mix_probability", &VariationParams::mix_probability);
  m.def("average_mix", &average_mix);

  // optimizers
  m.def(
      "acceptance_probability",
      [](double old_value, double new_value, double beta) {
        return acceptance_probability(old_value, new_value, AcceptanceRule{beta});
      },
      py::arg("old"), py::arg("new"), py::arg("beta"));

  py::enum_<Topology>(m, "Topology")
      .value("Ring", Topology::Ring)
      .value("Torus", Topology::Torus);

  py::class_<IsingConfig>(m, "IsingConfig")
      .def(py::init([](Topology t, int w, int h, double beta, VariationParams v) {
             return IsingConfig{t, w, h, beta, v};
           }),
           py::arg("topology") = Topology::Torus, py::arg("width") = 30, py::arg("height") = 30,
           py::arg("beta") = 100.0, py::arg("variation") = VariationParams{})
      .def_readwrite("topology", &IsingConfig::topology)
      .def_readwrite("width", &IsingConfig::width)
      .def_readwrite("height", &IsingConfig::height)
      .def_readwrite("beta", &IsingConfig::beta)
      .def_readwrite("variation", &IsingConfig::variation);

  py::class_<CellularConfig>(m, "CellularConfig")
      .def(py::init([](Topology t, int w, int h, double p, VariationParams v) {
             return CellularConfig{t, w, h, p, v};
           }),
           py::arg("topology") = Topology::Torus, py::arg("width") = 30, py::arg("height") = 30,
           py::arg("accept_worse_prob") = 0.10, py::arg("variation") = VariationParams{})
      .def_readwrite("accept_worse_prob", &CellularConfig::accept_worse_prob);

  py::class_<AnnealingConfig>(m, "AnnealingConfig")
      .def(py::init([](double b0, VariationParams v) { return AnnealingConfig{b0, v}; }),
           py::arg("beta0") = 1.0, py::arg("variation") = VariationParams{})
      .def_readwrite("beta0", &AnnealingConfig::beta0);

  py::class_<MutationConfig>(m, "MutationConfig")
      .def(py::init([](VariationParams v) { return MutationConfig{v}; }),
           py::arg("variation") = VariationParams{});

  py::class_<MixtureConfig>(m, "MixtureConfig")
      .def(py::init([](int n, double keep) { return MixtureConfig{n, keep}; }),
           py::arg("pop_size") = 100, py::arg("keep_prob") = 0.10)
      .def_readwrite("pop_size", &MixtureConfig::pop_size)
      .def_readwrite("keep_prob", &MixtureConfig::keep_prob);

  py::class_<RandomSearchConfig>(m, "RandomSearchConfig").def(py::init<>());

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("best_x", &RunResult::best_x)
      .def_readonly("best_f", &RunResult::best_f)
      .def_readonly("evals_used", &RunResult::evals_used)
      .def_readonly("hits", &RunResult::hits)
      .def_property_readonly("trace",
                             [](const RunResult& r) {
                               std::vector<std::pair<std::int64_t, double>> out;
                               for (const auto& p : r.trace) out.emplace_back(p.eval_index, p.best_f);
                               return out;
                             })
      .def("best_at", &RunResult::best_at);

  def_runner<IsingConfig>(
      m, "run_ising",
      [](const IsingConfig& c, BudgetedEvaluator& ev, Rng& rng, const MinimaCatalog* cat) {
        return run_ising(c, ev, rng, cat);
      },
      "Lattice optimizer with Metropolis-style acceptance");
  def_runner<CellularConfig>(m, "run_cellular", &run_cellular,
                             "Lattice optimizer with a fixed worse-move probability");
  def_runner<AnnealingConfig>(m, "run_sim_annealing", &run_sim_annealing,
                              "Simulated annealing with beta = beta0 * sqrt(i)");
  def_runner<MutationConfig>(m, "run_mutation", &run_mutation, "Greedy normal mutation");
  def_runner<MixtureConfig>(m, "run_mixture", &run_mixture, "Pairwise-averaging population");
  def_runner<RandomSearchConfig>(m, "run_random_search", &run_random_search,
                                 "Uniform sampling with replacement");

  // harness
  m.def("algorithm_id", &algorithm_id);
  m.def("config_id", &config_id);
  m.def("log_checkpoints", &log_checkpoints, py::arg("lo_decade") = 2, py::arg("hi_decade") = 5,
        py::arg("per_decade") = 20);

  py::class_<ExperimentPlan>(m, "ExperimentPlan")
      .def(py::init([](AlgorithmConfig algo, int n_runs, std::int64_t budget,
                       std::uint64_t base_seed, std::vector<std::int64_t> checkpoints,
                       ObjectiveSpec objective, int threads) {
             ExperimentPlan p;
             p.algorithm = std::move(algo);
             p.n_runs = n_runs;
             p.budget = budget;
             p.base_seed = base_seed;
             p.checkpoint_schedule = std::move(checkpoints);
             p.objective = std::move(objective);
             p.threads = threads;
             p.validate();
             return p;
           }),
           py::arg("algorithm"), py::arg("n_runs") = 100, py::arg("budget") = 100000,
           py::arg("base_seed") = 0, py::arg("checkpoints") = log_checkpoints(),
           py::arg("objective") = ObjectiveSpec::benchmark(), py::arg("threads") = 1)
      .def_readonly("n_runs", &ExperimentPlan::n_runs)
      .def_readonly("budget", &ExperimentPlan::budget)
      .def_readonly("base_seed", &ExperimentPlan::base_seed)
      .def_readonly("checkpoint_schedule", &ExperimentPlan::checkpoint_schedule);

  py::class_<CheckpointStat>(m, "CheckpointStat")
      .def_readonly("eval_index", &CheckpointStat::eval_index)
      .def_readonly("mean_best_f", &CheckpointStat::mean_best_f)
      .def_readonly("std_best_f", &CheckpointStat::std_best_f);

  py::class_<AggregateStats>(m, "AggregateStats")
      .def_readonly("mean_best_f", &AggregateStats::mean_best_f)
      .def_readonly("std_best_f", &AggregateStats::std_best_f)
      .def_readonly("per_checkpoint", &AggregateStats::per_checkpoint);

  py::class_<Replication>(m, "Replication")
      .def_readonly("runs", &Replication::runs)
      .def_readonly("stats", &Replication::stats)
      .def("runs_csv",
           [](const Replication& r) {
             return to_text([&](std::ostream& os) { csv::write_runs(os, r); });
           })
      .def("trace_csv", [](const Replication& r) {
        return to_text([&](std::ostream& os) { csv::write_trace(os, r); });
      });

  m.def("replicate", &replicate, py::arg("plan"), py::arg("catalog") = nullptr,
        py::call_guard<py::gil_scoped_release>());

  py::class_<Snapshot>(m, "Snapshot")
      .def_readonly("step", &Snapshot::step)
      .def_readonly("beta", &Snapshot::beta)
      .def_readonly("width", &Snapshot::width)
      .def_readonly("height", &Snapshot::height)
      .def_readonly("cells", &Snapshot::cells);

  py::class_<PhaseSweepConfig>(m, "PhaseSweepConfig")
      .def(py::init<>())
      .def_readwrite("betas", &PhaseSweepConfig::betas)
      .def_readwrite("steps", &PhaseSweepConfig::steps)
      .def_readwrite("snapshot_steps", &PhaseSweepConfig::snapshot_steps)
      .def_readwrite("topology", &PhaseSweepConfig::topology)
      .def_readwrite("width", &PhaseSweepConfig::width)
      .def_readwrite("height", &PhaseSweepConfig::height)
      .def_readwrite("variation", &PhaseSweepConfig::variation)
      .def_readwrite("seed", &PhaseSweepConfig::seed)
      .def_readwrite("n_seeds", &PhaseSweepConfig::n_seeds);

  py::class_<PhaseEntry>(m, "PhaseEntry")
      .def_readonly("dims", &PhaseEntry::dims)
      .def_readonly("beta", &PhaseEntry::beta)
      .def_readonly("step", &PhaseEntry::step)
      .def_readonly("rel_std", &PhaseEntry::rel_std);

  py::class_<PhaseSweepResult>(m, "PhaseSweepResult")
      .def_readonly("entries", &PhaseSweepResult::entries)
      .def_readonly("snapshots", &PhaseSweepResult::snapshots)
      .def("rel_std_at", &PhaseSweepResult::rel_std_at)
      .def("phase_csv", [](const PhaseSweepResult& r) {
        return to_text([&](std::ostream& os) { csv::write_phase(os, r); });
      });

  m.def("phase_sweep", &phase_sweep, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<EnsembleCoverage>(m, "EnsembleCoverage")
      .def_readonly("k", &EnsembleCoverage::k)
      .def_readonly("per_run_found", &EnsembleCoverage::per_run_found)
      .def_readonly("mean_found", &EnsembleCoverage::mean_found);

  m.def(
      "ensemble_coverage",
      [](const ExperimentPlan& plan, const MinimaCatalog& catalog, std::size_t k) {
        return ensemble_coverage(plan, catalog, k);
      },
      py::arg("plan"), py::arg("catalog"), py::arg("k") = 10,
      py::call_guard<py::gil_scoped_release>());
}
