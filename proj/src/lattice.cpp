#include "isingevo/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace isingevo {

namespace {

int wrap(int v, int n) noexcept { return v < 0 ? v + n : (v >= n ? v - n : v); }

}  // namespace

LatticeState::LatticeState(Topology topology, int width, int height, ObjectiveSpec domain)
    : topology_(topology), width_(width), height_(height), domain_(std::move(domain)) {
  if (width_ < 1 || height_ < 1) {
    throw std::invalid_argument("lattice dimensions must be positive");
  }
  if (topology_ == Topology::Ring && height_ != 1) {
    throw std::invalid_argument("a ring lattice has height 1, got " +
                                std::to_string(height_));
  }
  const auto n = static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  cells_.assign(n, domain_.lo);
  quals_.assign(n, raw_value(domain_.lo));
}

Site LatticeState::best_site() const noexcept {
  const auto it = std::min_element(quals_.begin(), quals_.end());
  const auto k = static_cast<int>(it - quals_.begin());
  return {k % width_, k / width_};
}

std::vector<Site> LatticeState::neighbors(Site s) const {
  std::vector<Site> out{{wrap(s.i - 1, width_), s.j}, {wrap(s.i + 1, width_), s.j}};
  if (topology_ == Topology::Torus) {
    out.push_back({s.i, wrap(s.j - 1, height_)});
    out.push_back({s.i, wrap(s.j + 1, height_)});
  }
  return out;
}

LatticeState init_uniform(BudgetedEvaluator& ev, Topology topology, int width,
                          int height, Rng& rng) {
  LatticeState state(topology, width, height, ev.spec());
  const auto n = static_cast<std::int64_t>(state.size());
  if (ev.remaining() <= n) {
    throw BudgetExhausted("lattice of " + std::to_string(n) +
                          " cells needs a budget above its size, " +
                          std::to_string(ev.remaining()) + " remaining");
  }
  const auto& domain = ev.spec();
  for (int i = 0; i < width; ++i) {
    for (int j = 0; j < height; ++j) {
      const auto x = uniform_int(rng, domain.lo, domain.hi);
      state.set({i, j}, x, ev.evaluate(x));
    }
  }
  return state;
}

Site pick_site(const LatticeState& state, Rng& rng) {
  const auto i = static_cast<int>(uniform_int(rng, 0, state.width()));
  const auto j = static_cast<int>(uniform_int(rng, 0, state.height()));
  return {i, j};
}

Site pick_neighbor(const LatticeState& state, Site s, Rng& rng) {
  const int w = state.width();
  const int h = state.height();
  if (state.topology() == Topology::Ring) {
    return uniform_int(rng, 0, 2) == 0 ? Site{wrap(s.i - 1, w), s.j}
                                       : Site{wrap(s.i + 1, w), s.j};
  }
  switch (uniform_int(rng, 0, 4)) {
    case 0: return {wrap(s.i - 1, w), s.j};
    case 1: return {wrap(s.i + 1, w), s.j};
    case 2: return {s.i, wrap(s.j - 1, h)};
    default: return {s.i, wrap(s.j + 1, h)};
  }
}

double relative_std(std::span<const std::int64_t> cells, const ObjectiveSpec& domain) {
  if (cells.empty()) return 0.0;
  const auto n = static_cast<double>(cells.size());
  double mean = 0.0;
  for (auto x : cells) mean += static_cast<double>(x);
  mean /= n;
  double ss = 0.0;
  for (auto x : cells) {
    const double d = static_cast<double>(x) - mean;
    ss += d * d;
  }
  return std::sqrt(ss / n) / static_cast<double>(domain.size());
}

double relative_std(const LatticeState& state) {
  return relative_std(state.cells(), state.domain());
}

Snapshot take_snapshot(const LatticeState& state, std::int64_t step, double beta) {
  return {step, beta, state.width(), state.height(),
          {state.cells().begin(), state.cells().end()}};
}

}  // namespace isingevo
