#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isingevo {

/// Thrown when an evaluator is asked for more evaluations than its budget allows.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a candidate outside the optimization domain reaches the evaluator.
/// All optimizers clamp their proposals, so this always indicates a caller bug.
class DomainViolation : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// |sin((x + 1) / 100)|, defined on every integer.
double raw_value(std::int64_t x) noexcept;

/// Integer search domain [lo, hi) together with the id of the function on it.
struct ObjectiveSpec {
  std::int64_t lo = 0;
  std::int64_t hi = 100000;
  std::string id = "abs_sin_100";

  /// Throws std::invalid_argument unless lo < hi and the id names a known objective.
  void validate() const;

  std::int64_t size() const noexcept { return hi - lo; }
  bool contains(std::int64_t x) const noexcept { return x >= lo && x < hi; }

  static ObjectiveSpec benchmark() { return {}; }
};

/// Objective ids accepted by ObjectiveSpec::validate. Only the integer sine ships.
std::vector<std::string> known_objectives();

/// Counts every evaluation against a fixed budget. Repeated arguments are
/// charged again; nothing is cached.
class BudgetedEvaluator {
 public:
  using Observer = std::function<void(std::int64_t x, double value)>;

  BudgetedEvaluator(ObjectiveSpec spec, std::int64_t budget);

  double evaluate(std::int64_t x);

  const ObjectiveSpec& spec() const noexcept { return spec_; }
  std::int64_t budget() const noexcept { return budget_; }
  std::int64_t used() const noexcept { return used_; }
  std::int64_t remaining() const noexcept { return budget_ - used_; }
  bool exhausted() const noexcept { return used_ >= budget_; }

  /// Called after every successful evaluation. Used by tests and tooling to
  /// audit what an optimizer touched.
  void set_observer(Observer observer) { observer_ = std::move(observer); }

 private:
  ObjectiveSpec spec_;
  std::int64_t budget_;
  std::int64_t used_ = 0;
  Observer observer_;
};

struct LocalMinimum {
  std::int64_t argmin = 0;
  double value = 0.0;
  int rank = 0;  // 1 = lowest value in the domain
};

/// Every strict local minimum of the objective inside a domain, sorted by value.
class MinimaCatalog {
 public:
  MinimaCatalog() = default;
  MinimaCatalog(ObjectiveSpec domain, std::vector<LocalMinimum> minima);

  const ObjectiveSpec& domain() const noexcept { return domain_; }
  std::span<const LocalMinimum> minima() const noexcept { return minima_; }
  std::size_t size() const noexcept { return minima_.size(); }
  bool empty() const noexcept { return minima_.empty(); }
  const LocalMinimum& operator[](std::size_t i) const { return minima_[i]; }

  /// True if x is the argmin of some catalog entry.
  bool is_argmin(std::int64_t x) const noexcept;

 private:
  ObjectiveSpec domain_;
  std::vector<LocalMinimum> minima_;
  std::vector<std::int64_t> sorted_argmins_;
};

/// Brute-force scan of [lo, hi). x is a minimum iff its value is strictly below
/// both integer neighbours; neighbours outside the domain are still evaluated.
/// Evaluations here are not budgeted.
MinimaCatalog enumerate_local_minima(const ObjectiveSpec& spec);

/// Arithmetic mean of the catalog values. Throws std::invalid_argument on an empty catalog.
double mean_minimum_value(const MinimaCatalog& catalog);

/// The k lowest minima. Throws std::invalid_argument if k is zero or exceeds the catalog.
std::vector<LocalMinimum> top_k(const MinimaCatalog& catalog, std::size_t k);

}  // namespace isingevo
