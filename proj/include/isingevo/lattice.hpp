#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isingevo/objective.hpp"
#include "isingevo/random.hpp"

namespace isingevo {

enum class Topology { Ring = 1, Torus = 2 };

struct Site {
  int i = 0;  // column, in [0, width)
  int j = 0;  // row, in [0, height)

  friend bool operator==(const Site&, const Site&) = default;
};

/// Population grid for the lattice optimizers. Cells hold integer candidates
/// and quals caches raw_value of each cell. Storage is row-major (j * width + i).
///
/// A Ring is a width x 1 lattice whose two neighbours wrap around; a Torus
/// uses the von-Neumann neighbourhood with periodic boundaries on both axes.
class LatticeState {
 public:
  LatticeState(Topology topology, int width, int height, ObjectiveSpec domain);

  Topology topology() const noexcept { return topology_; }
  int dims() const noexcept { return static_cast<int>(topology_); }
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const ObjectiveSpec& domain() const noexcept { return domain_; }

  std::size_t index(Site s) const noexcept {
    return static_cast<std::size_t>(s.j) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(s.i);
  }

  std::int64_t cell(Site s) const noexcept { return cells_[index(s)]; }
  double qual(Site s) const noexcept { return quals_[index(s)]; }

  /// Overwrites a cell and its cached quality. The caller guarantees
  /// value == raw_value(x).
  void set(Site s, std::int64_t x, double value) noexcept {
    const auto k = index(s);
    cells_[k] = x;
    quals_[k] = value;
  }

  std::span<const std::int64_t> cells() const noexcept { return cells_; }
  std::span<const double> quals() const noexcept { return quals_; }

  /// Site holding the lowest cached quality (first one on ties).
  Site best_site() const noexcept;

  /// The 2 (ring) or 4 (torus) neighbours of s, in the order
  /// left, right[, down, up].
  std::vector<Site> neighbors(Site s) const;

 private:
  Topology topology_;
  int width_;
  int height_;
  ObjectiveSpec domain_;
  std::vector<std::int64_t> cells_;
  std::vector<double> quals_;
};

/// Copy of the lattice cells at one point of a run.
struct Snapshot {
  std::int64_t step = 0;
  double beta = 0.0;
  int width = 0;
  int height = 0;
  std::vector<std::int64_t> cells;
};

/// Fills every cell uniformly from the domain, evaluating each through ev.
/// Requires ev.remaining() > width * height so that at least one update step
/// is left after initialization; throws BudgetExhausted otherwise.
LatticeState init_uniform(BudgetedEvaluator& ev, Topology topology, int width,
                          int height, Rng& rng);

Site pick_site(const LatticeState& state, Rng& rng);
Site pick_neighbor(const LatticeState& state, Site s, Rng& rng);

/// Population standard deviation of the cells divided by the domain width.
double relative_std(std::span<const std::int64_t> cells, const ObjectiveSpec& domain);
double relative_std(const LatticeState& state);

Snapshot take_snapshot(const LatticeState& state, std::int64_t step, double beta);

}  // namespace isingevo
