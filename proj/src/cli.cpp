#include "isingevo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "isingevo/csv.hpp"
#include "isingevo/harness.hpp"

namespace isingevo::cli {

namespace {

// Every numeric flag, with the benchmark-scale defaults.
struct Options {
  std::string algo = "ising";
  std::vector<std::string> algos;
  std::vector<int> widths;
  int dims = 2;
  int width = 30;
  int height = 30;
  double beta = 100.0;
  double beta0 = 1.0;
  double accept_worse = 0.10;
  int pop_size = 100;
  double keep_prob = 0.10;
  double mutation_std = 100.0;
  double mix_prob = 0.5;

  std::int64_t lo = 0;
  std::int64_t hi = 100000;
  std::int64_t budget = 100000;
  int runs = 100;
  std::uint64_t seed = 0;
  int threads = 1;
  int k = 10;
  int per_decade = 20;

  std::vector<double> betas{0.1, 1.0, 10.0, 100.0};
  std::vector<std::int64_t> steps;
  std::vector<std::int64_t> snapshot_steps{0, 1000, 10000, 100000};
  int seeds = 1;

  std::string out;
  std::string trace_out;
  std::string snapshot_out;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

VariationParams variation(const Options& o) { return {o.mutation_std, o.mix_prob}; }

Topology topology(const Options& o) {
  if (o.dims != 1 && o.dims != 2) throw UsageError("--dims must be 1 or 2");
  return o.dims == 1 ? Topology::Ring : Topology::Torus;
}

AlgorithmConfig build_config(const Options& o, const std::string& algo, int width) {
  const auto topo = topology(o);
  const int height = topo == Topology::Ring ? 1 : (width == o.width ? o.height : width);
  if (algo == "ising") return IsingConfig{topo, width, height, o.beta, variation(o)};
  if (algo == "cellular") {
    return CellularConfig{topo, width, height, o.accept_worse, variation(o)};
  }
  if (algo == "annealing") return AnnealingConfig{o.beta0, variation(o)};
  if (algo == "mutation") return MutationConfig{variation(o)};
  if (algo == "mixture") return MixtureConfig{o.pop_size, o.keep_prob};
  if (algo == "random") return RandomSearchConfig{};
  throw UsageError("unknown algorithm '" + algo + "'");
}

ExperimentPlan build_plan(const Options& o, const AlgorithmConfig& config) {
  ExperimentPlan plan;
  plan.algorithm = config;
  plan.objective = ObjectiveSpec{o.lo, o.hi, "abs_sin_100"};
  plan.n_runs = o.runs;
  plan.budget = o.budget;
  plan.base_seed = o.seed;
  plan.threads = o.threads;
  auto schedule = log_checkpoints(0, 9, o.per_decade);
  std::erase_if(schedule, [&](auto cp) { return cp < 100 || cp > o.budget; });
  plan.checkpoint_schedule = std::move(schedule);
  try {
    plan.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return plan;
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
  if (path.empty()) return;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  writer(os);
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

std::string summary(double mean_best_f, int runs, std::int64_t evals) {
  return "mean_best_f=" + sci(mean_best_f) + " runs=" + std::to_string(runs) +
         " evals=" + std::to_string(evals);
}

// Splits "--config FILE" off the arguments and turns its key=value lines into
// flags, skipping keys that also appear on the command line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty() || args.empty()) return args;

  std::ifstream is(path);
  if (!is) throw UsageError("cannot read config file '" + path + "'");
  auto given = [&](const std::string& key) {
    const auto flag = "--" + key;
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };

  std::vector<std::string> injected;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    auto key = CLI::detail::trim_copy(line.substr(0, eq));
    auto value = CLI::detail::trim_copy(line.substr(eq + 1));
    if (!given(key)) {
      injected.push_back("--" + key);
      injected.push_back(value);
    }
  }
  // The subcommand name stays first so injected flags bind to it.
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

void add_plan_flags(CLI::App* sub, Options& o, bool multi_algo) {
  const auto ids = algorithm_ids();
  if (multi_algo) {
    sub->add_option("--algo", o.algos, "Algorithms to compare")
        ->delimiter(',')
        ->check(CLI::IsMember(ids))
        ->required();
    sub->add_option("--widths", o.widths, "Lattice widths for lattice algorithms")
        ->delimiter(',');
  } else {
    sub->add_option("--algo", o.algo, "Algorithm")->check(CLI::IsMember(ids));
  }
  sub->add_option("--dims", o.dims, "Lattice dimensions (1 ring, 2 torus)")
      ->check(CLI::IsMember({1, 2}));
  sub->add_option("--width", o.width, "Lattice width (ring length when --dims 1)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--height", o.height, "Lattice height")->check(CLI::PositiveNumber);
  sub->add_option("--beta", o.beta, "Inverse temperature for ising")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--beta0", o.beta0, "Annealing base inverse temperature")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--accept-worse", o.accept_worse, "Cellular acceptance of worse moves")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--pop-size", o.pop_size, "Mixture population size")
      ->check(CLI::Range(2, 1 << 30));
  sub->add_option("--keep-prob", o.keep_prob, "Mixture probability to keep a worse child")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--mutation-std", o.mutation_std, "Standard deviation of normal steps")
      ->check(CLI::PositiveNumber);
  sub->add_option("--mix-prob", o.mix_prob, "Probability of a normal step over averaging")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--budget", o.budget, "Evaluations per run")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "Base seed (run i uses seed + i)");
  sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--lo", o.lo, "Domain lower bound (inclusive)");
  sub->add_option("--hi", o.hi, "Domain upper bound (exclusive)");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ising-model evolutionary optimization experiments", "isingevo"};
  app.require_subcommand(1);

  auto* oracle = app.add_subcommand("oracle", "Enumerate all local minima of the benchmark");
  oracle->add_option("--lo", o.lo, "Domain lower bound (inclusive)");
  oracle->add_option("--hi", o.hi, "Domain upper bound (exclusive)");
  oracle->add_option("--out", o.out, "CSV output path");

  auto* run_cmd = app.add_subcommand("run", "Single optimization run");
  add_plan_flags(run_cmd, o, false);
  run_cmd->add_option("--out", o.out, "Runs CSV output path");
  run_cmd->add_option("--trace-out", o.trace_out, "Trace CSV output path");

  auto* bench = app.add_subcommand("bench", "Replicated runs of one algorithm");
  add_plan_flags(bench, o, false);
  bench->add_option("--runs", o.runs, "Number of runs")->check(CLI::PositiveNumber);
  bench->add_option("--out", o.out, "Runs CSV output path");
  bench->add_option("--trace-out", o.trace_out, "Trace CSV output path");

  auto* sweep = app.add_subcommand("sweep", "Mean best-so-far curves over the budget");
  add_plan_flags(sweep, o, true);
  sweep->add_option("--runs", o.runs, "Runs per curve")->check(CLI::PositiveNumber);
  sweep->add_option("--per-decade", o.per_decade, "Checkpoints per decade")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", o.out, "Curves CSV output path");
  sweep->add_option("--trace-out", o.trace_out, "Per-run trace CSV output path");

  auto* phase = app.add_subcommand("phase", "Relative population spread over time per beta");
  phase->add_option("--betas", o.betas, "Inverse temperatures")->delimiter(',');
  phase->add_option("--steps", o.steps, "Update steps at which to record rel_std")
      ->delimiter(',');
  phase->add_option("--snapshot-steps", o.snapshot_steps, "Steps with full snapshots")
      ->delimiter(',');
  phase->add_option("--dims", o.dims, "Lattice dimensions (1 ring, 2 torus)")
      ->check(CLI::IsMember({1, 2}));
  phase->add_option("--width", o.width, "Lattice width (ring length when --dims 1)")
      ->check(CLI::PositiveNumber);
  phase->add_option("--height", o.height, "Lattice height")->check(CLI::PositiveNumber);
  phase->add_option("--mutation-std", o.mutation_std, "Standard deviation of normal steps")
      ->check(CLI::PositiveNumber);
  phase->add_option("--mix-prob", o.mix_prob, "Probability of a normal step over averaging")
      ->check(CLI::Range(0.0, 1.0));
  phase->add_option("--seed", o.seed, "Seed");
  phase->add_option("--seeds", o.seeds, "Seeds averaged per beta")->check(CLI::PositiveNumber);
  phase->add_option("--out", o.out, "Phase CSV output path");
  phase->add_option("--snapshot-out", o.snapshot_out, "Snapshot CSV output path");

  auto* ensemble = app.add_subcommand("ensemble", "Coverage of the k lowest minima");
  add_plan_flags(ensemble, o, false);
  ensemble->add_option("--runs", o.runs, "Number of runs")->check(CLI::PositiveNumber);
  ensemble->add_option("--k", o.k, "Number of lowest minima")->check(CLI::PositiveNumber);
  ensemble->add_option("--out", o.out, "Ensemble CSV output path");

  bool width_given = false;
  try {
    const auto args = expand_config(raw_args);
    std::vector<const char*> argv{"isingevo"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    width_given = std::any_of(args.begin(), args.end(), [](const std::string& a) {
      return a == "--width" || a.rfind("--width=", 0) == 0;
    });
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (o.dims == 1) {
    o.height = 1;
    if (!width_given) o.width = 900;
  }

  try {
    if (oracle->parsed()) {
      const ObjectiveSpec spec{o.lo, o.hi, "abs_sin_100"};
      try {
        spec.validate();
        if (spec.size() < 3) throw std::invalid_argument("domain needs at least 3 points");
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto catalog = enumerate_local_minima(spec);
      write_file(o.out, [&](std::ostream& os) { csv::write_oracle(os, catalog); });
      out << "minima=" << catalog.size();
      if (!catalog.empty()) {
        out << " rank1_argmin=" << catalog[0].argmin << " rank1_value=" << sci(catalog[0].value)
            << " mean_value=" << sci(mean_minimum_value(catalog));
      }
      out << "\n";
      return kExitOk;
    }

    if (run_cmd->parsed() || bench->parsed()) {
      if (run_cmd->parsed()) o.runs = 1;
      const auto plan = build_plan(o, build_config(o, o.algo, o.width));
      const auto catalog = enumerate_local_minima(plan.objective);
      const auto rep = replicate(plan, &catalog);
      write_file(o.out, [&](std::ostream& os) { csv::write_runs(os, rep); });
      write_file(o.trace_out, [&](std::ostream& os) { csv::write_trace(os, rep); });
      out << summary(rep.stats.mean_best_f, plan.n_runs, plan.budget) << "\n";
      return kExitOk;
    }

    if (sweep->parsed()) {
      std::vector<ExperimentPlan> plans;
      const auto widths = o.widths.empty() ? std::vector<int>{o.width} : o.widths;
      for (const auto& algo : o.algos) {
        if (algo == "ising" || algo == "cellular") {
          for (int w : widths) plans.push_back(build_plan(o, build_config(o, algo, w)));
        } else {
          plans.push_back(build_plan(o, build_config(o, algo, o.width)));
        }
      }
      const auto catalog = enumerate_local_minima(plans.front().objective);
      const auto result = budget_sweep(plans, catalog);
      write_file(o.out, [&](std::ostream& os) { csv::write_curves(os, result); });
      write_file(o.trace_out, [&](std::ostream& os) {
        bool first = true;
        for (const auto& rep : result.curves) {
          std::ostringstream block;
          csv::write_trace(block, rep);
          auto text = block.str();
          if (!first) text.erase(0, text.find('\n') + 1);
          os << text;
          first = false;
        }
      });
      for (const auto& rep : result.curves) {
        out << algorithm_id(rep.plan.algorithm) << '/' << config_id(rep.plan.algorithm) << ' '
            << summary(rep.stats.mean_best_f, rep.plan.n_runs, rep.plan.budget) << "\n";
      }
      return kExitOk;
    }

    if (phase->parsed()) {
      PhaseSweepConfig cfg;
      cfg.betas = o.betas;
      if (!o.steps.empty()) cfg.steps = o.steps;
      cfg.snapshot_steps = o.snapshot_steps;
      std::erase_if(cfg.snapshot_steps, [&](auto s) {
        return !std::binary_search(cfg.steps.begin(), cfg.steps.end(), s);
      });
      cfg.topology = topology(o);
      cfg.width = o.width;
      cfg.height = o.height;
      cfg.variation = variation(o);
      cfg.seed = o.seed;
      cfg.n_seeds = o.seeds;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto result = phase_sweep(cfg);
      write_file(o.out, [&](std::ostream& os) { csv::write_phase(os, result); });
      write_file(o.snapshot_out,
                 [&](std::ostream& os) { csv::write_snapshots(os, result.snapshots); });
      out << "final_rel_std";
      for (double b : cfg.betas) {
        out << " beta" << b << '=' << sci(result.rel_std_at(b, cfg.steps.back()));
      }
      out << " steps=" << cfg.steps.back() << "\n";
      return kExitOk;
    }

    if (ensemble->parsed()) {
      const auto plan = build_plan(o, build_config(o, o.algo, o.width));
      const auto catalog = enumerate_local_minima(plan.objective);
      if (static_cast<std::size_t>(o.k) > catalog.size()) {
        throw UsageError("--k exceeds the number of minima in the domain");
      }
      const auto rep = replicate(plan, &catalog);
      const auto cov = ensemble_coverage(rep.runs, catalog, static_cast<std::size_t>(o.k));
      write_file(o.out, [&](std::ostream& os) { csv::write_ensemble(os, rep, cov); });
      out << "mean_found=" << sci(cov.mean_found) << " k=" << o.k << " runs=" << plan.n_runs
          << " evals=" << plan.budget << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace isingevo::cli
