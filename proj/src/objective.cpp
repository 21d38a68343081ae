#include "isingevo/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace isingevo {

double raw_value(std::int64_t x) noexcept {
  return std::fabs(std::sin(static_cast<double>(x + 1) / 100.0));
}

std::vector<std::string> known_objectives() { return {"abs_sin_100"}; }

void ObjectiveSpec::validate() const {
  if (lo >= hi) {
    throw std::invalid_argument("objective domain requires lo < hi, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  const auto ids = known_objectives();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw std::invalid_argument("unknown objective id '" + id + "'");
  }
}

BudgetedEvaluator::BudgetedEvaluator(ObjectiveSpec spec, std::int64_t budget)
    : spec_(std::move(spec)), budget_(budget) {
  spec_.validate();
  if (budget_ < 0) {
    throw std::invalid_argument("evaluation budget must be non-negative");
  }
}

double BudgetedEvaluator::evaluate(std::int64_t x) {
  if (used_ >= budget_) {
    throw BudgetExhausted("evaluation budget of " + std::to_string(budget_) +
                          " exhausted");
  }
  if (!spec_.contains(x)) {
    throw DomainViolation("candidate " + std::to_string(x) + " outside [" +
                          std::to_string(spec_.lo) + ", " +
                          std::to_string(spec_.hi) + ")");
  }
  ++used_;
  const double value = raw_value(x);
  if (observer_) observer_(x, value);
  return value;
}

MinimaCatalog::MinimaCatalog(ObjectiveSpec domain, std::vector<LocalMinimum> minima)
    : domain_(std::move(domain)), minima_(std::move(minima)) {
  sorted_argmins_.reserve(minima_.size());
  for (const auto& m : minima_) sorted_argmins_.push_back(m.argmin);
  std::sort(sorted_argmins_.begin(), sorted_argmins_.end());
}

bool MinimaCatalog::is_argmin(std::int64_t x) const noexcept {
  return std::binary_search(sorted_argmins_.begin(), sorted_argmins_.end(), x);
}

MinimaCatalog enumerate_local_minima(const ObjectiveSpec& spec) {
  spec.validate();
  if (spec.size() < 3) {
    throw std::invalid_argument("local-minimum scan needs at least 3 domain points");
  }

  std::vector<LocalMinimum> found;
  double left = raw_value(spec.lo - 1);
  double here = raw_value(spec.lo);
  for (std::int64_t x = spec.lo; x < spec.hi; ++x) {
    const double right = raw_value(x + 1);
    if (here < left && here < right) found.push_back({x, here, 0});
    left = here;
    here = right;
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const LocalMinimum& a, const LocalMinimum& b) {
                     return a.value < b.value;
                   });
  for (std::size_t i = 0; i < found.size(); ++i) {
    found[i].rank = static_cast<int>(i + 1);
  }
  return MinimaCatalog(spec, std::move(found));
}

double mean_minimum_value(const MinimaCatalog& catalog) {
  if (catalog.empty()) {
    throw std::invalid_argument("mean of an empty minima catalog");
  }
  const auto minima = catalog.minima();
  const double sum = std::accumulate(
      minima.begin(), minima.end(), 0.0,
      [](double acc, const LocalMinimum& m) { return acc + m.value; });
  return sum / static_cast<double>(minima.size());
}

std::vector<LocalMinimum> top_k(const MinimaCatalog& catalog, std::size_t k) {
  if (k == 0 || k > catalog.size()) {
    throw std::invalid_argument("top_k: k=" + std::to_string(k) +
                                " outside [1, " + std::to_string(catalog.size()) + "]");
  }
  const auto minima = catalog.minima();
  return {minima.begin(), minima.begin() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace isingevo
