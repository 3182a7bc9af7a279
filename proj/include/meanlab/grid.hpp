#pragma once

#include <cstdint>
#include <vector>

namespace meanlab {

/// Sampling plan over argument pairs. Points are canonical pairs
/// (1 - t, 1 + t); symmetry makes negative t redundant.
struct GridSpec {
  std::vector<double> t_values;  ///< sorted, each in (0, 1)
  std::vector<double> scale_factors{1e-3, 1.0, 1e3};
  std::uint64_t seed = 0;

  bool includes_near_diagonal() const;  ///< min t <= 1e-4
  bool includes_extreme() const;        ///< max t >= 1 - 1e-6
};

struct GridOptions {
  int points = 256;  ///< total; split 200:56 between log-spaced and uniform
  double t_min = 1e-6;
  double t_max = 1.0 - 1e-8;
  std::uint64_t seed = 0x5eed;
};

/// Log-spaced t values on [t_min, t_max] plus stratified uniform values on
/// (0, 1) drawn from a generator seeded with `seed`. With the default
/// options this is 200 + 56 = 256 points.
GridSpec make_grid(const GridOptions& options = {});

}  // namespace meanlab
