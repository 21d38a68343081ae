#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isingevo/harness.hpp"
#include "isingevo/lattice.hpp"
#include "isingevo/objective.hpp"

namespace isingevo::csv {

/// Scientific notation with 13 significant digits.
std::string format_real(double v);

// Every writer emits a header line followed by one row per record.

// rank,argmin,value
void write_oracle(std::ostream& os, const MinimaCatalog& catalog);

// algorithm,config_id,seed,evals_used,best_x,best_f
void write_runs(std::ostream& os, const Replication& rep);

// algorithm,config_id,seed,eval_index,best_f  (one row per checkpoint per run)
void write_trace(std::ostream& os, const Replication& rep);

// algorithm,config_id,eval_index,mean_best_f,std_best_f
// Reference minima are appended as algorithm "minimum", config_id "rank<r>".
void write_curves(std::ostream& os, const BudgetSweep& sweep);

// dims,beta,step,rel_std
void write_phase(std::ostream& os, const PhaseSweepResult& result);

// algorithm,config_id,seed,found_count
void write_ensemble(std::ostream& os, const Replication& rep, const EnsembleCoverage& cov);

// beta,step,i,j,value  (row-major: j outer, i inner)
void write_snapshots(std::ostream& os, const std::vector<Snapshot>& snapshots);

/// Parsed CSV: header plus string rows. Used to check emitted files.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name; throws std::out_of_range if missing.
  std::size_t column(const std::string& name) const;
};

/// Reads comma-separated text without quoting. Throws std::runtime_error if
/// a row's field count differs from the header's.
Table read(std::istream& is);

}  // namespace isingevo::csv
