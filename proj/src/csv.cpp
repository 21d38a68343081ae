#include "isingevo/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace isingevo::csv {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

void write_oracle(std::ostream& os, const MinimaCatalog& catalog) {
  os << "rank,argmin,value\n";
  for (const auto& m : catalog.minima()) {
    os << m.rank << ',' << m.argmin << ',' << format_real(m.value) << '\n';
  }
}

void write_runs(std::ostream& os, const Replication& rep) {
  const auto algo = algorithm_id(rep.plan.algorithm);
  const auto cfg = config_id(rep.plan.algorithm);
  os << "algorithm,config_id,seed,evals_used,best_x,best_f\n";
  for (std::size_t i = 0; i < rep.runs.size(); ++i) {
    const auto& r = rep.runs[i];
    os << algo << ',' << cfg << ',' << rep.plan.seed_for(static_cast<int>(i)) << ','
       << r.evals_used << ',' << r.best_x << ',' << format_real(r.best_f) << '\n';
  }
}

void write_trace(std::ostream& os, const Replication& rep) {
  const auto algo = algorithm_id(rep.plan.algorithm);
  const auto cfg = config_id(rep.plan.algorithm);
  os << "algorithm,config_id,seed,eval_index,best_f\n";
  for (std::size_t i = 0; i < rep.runs.size(); ++i) {
    const auto seed = rep.plan.seed_for(static_cast<int>(i));
    for (auto cp : rep.plan.checkpoint_schedule) {
      os << algo << ',' << cfg << ',' << seed << ',' << cp << ','
         << format_real(rep.runs[i].best_at(cp)) << '\n';
    }
  }
}

void write_curves(std::ostream& os, const BudgetSweep& sweep) {
  os << "algorithm,config_id,eval_index,mean_best_f,std_best_f\n";
  for (const auto& rep : sweep.curves) {
    const auto algo = algorithm_id(rep.plan.algorithm);
    const auto cfg = config_id(rep.plan.algorithm);
    for (const auto& c : rep.stats.per_checkpoint) {
      os << algo << ',' << cfg << ',' << c.eval_index << ',' << format_real(c.mean_best_f)
         << ',' << format_real(c.std_best_f) << '\n';
    }
  }
  if (sweep.curves.empty()) return;
  for (const auto& m : sweep.reference) {
    for (auto cp : sweep.curves.front().plan.checkpoint_schedule) {
      os << "minimum,rank" << m.rank << ',' << cp << ',' << format_real(m.value) << ','
         << format_real(0.0) << '\n';
    }
  }
}

void write_phase(std::ostream& os, const PhaseSweepResult& result) {
  os << "dims,beta,step,rel_std\n";
  for (const auto& e : result.entries) {
    os << e.dims << ',' << format_real(e.beta) << ',' << e.step << ','
       << format_real(e.rel_std) << '\n';
  }
}

void write_ensemble(std::ostream& os, const Replication& rep, const EnsembleCoverage& cov) {
  const auto algo = algorithm_id(rep.plan.algorithm);
  const auto cfg = config_id(rep.plan.algorithm);
  os << "algorithm,config_id,seed,found_count\n";
  for (std::size_t i = 0; i < cov.per_run_found.size(); ++i) {
    os << algo << ',' << cfg << ',' << rep.plan.seed_for(static_cast<int>(i)) << ','
       << cov.per_run_found[i] << '\n';
  }
}

void write_snapshots(std::ostream& os, const std::vector<Snapshot>& snapshots) {
  os << "beta,step,i,j,value\n";
  for (const auto& s : snapshots) {
    const auto beta = format_real(s.beta);
    for (int j = 0; j < s.height; ++j) {
      for (int i = 0; i < s.width; ++i) {
        os << beta << ',' << s.step << ',' << i << ',' << j << ','
           << s.cells[static_cast<std::size_t>(j) * s.width + i] << '\n';
      }
    }
  }
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == name) return k;
  }
  throw std::out_of_range("no CSV column '" + name + "'");
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

Table read(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line)) return t;
  t.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto row = split(line);
    if (row.size() != t.header.size()) {
      throw std::runtime_error("CSV row has " + std::to_string(row.size()) +
                               " fields, header has " + std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace isingevo::csv
