#include "meanlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace meanlab {

bool GridSpec::includes_near_diagonal() const {
  return !t_values.empty() && t_values.front() <= 1e-4;
}

bool GridSpec::includes_extreme() const {
  return !t_values.empty() && t_values.back() >= 1.0 - 1e-6;
}

GridSpec make_grid(const GridOptions& options) {
  if (options.points < 2) throw std::invalid_argument("make_grid: need at least two points");
  if (!(options.t_min > 0.0 && options.t_min < options.t_max && options.t_max < 1.0)) {
    throw std::invalid_argument("make_grid: need 0 < t_min < t_max < 1");
  }
  const int n_log = std::max(2, static_cast<int>(std::lround(options.points * 200.0 / 256.0)));
  const int n_uniform = options.points - n_log;

  GridSpec g;
  g.seed = options.seed;
  const double l0 = std::log(options.t_min);
  const double l1 = std::log(options.t_max);
  for (int i = 0; i < n_log; ++i) {
    g.t_values.push_back(std::exp(l0 + (l1 - l0) * i / (n_log - 1)));
  }
  g.t_values.front() = options.t_min;
  g.t_values.back() = options.t_max;

  // One draw per stratum of (t_min, t_max).
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double width = (options.t_max - options.t_min) / std::max(n_uniform, 1);
  for (int i = 0; i < n_uniform; ++i) {
    g.t_values.push_back(options.t_min + width * (i + unit(rng)));
  }
  std::sort(g.t_values.begin(), g.t_values.end());
  return g;
}

}  // namespace meanlab
