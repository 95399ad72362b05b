#pragma once

#include <cstdint>
#include <functional>

#include "abc/types.hpp"

namespace abc {

// Regular evaluation grid: per_dim_points cell centers per dimension over
// [lower, upper]. Flat indexing is row-major with dimension 0 slowest.
struct GridSpec {
  int per_dim_points = 30;
  Matrix bounds;  // K x 2 (column 0 lower, column 1 upper)
  bool widened_degenerate = false;

  int dim() const { return static_cast<int>(bounds.rows()); }
  int64_t total_points() const;
  double cell_width(int k) const {
    return (bounds(k, 1) - bounds(k, 0)) / per_dim_points;
  }
  double coord(int k, int idx) const {
    return bounds(k, 0) + (idx + 0.5) * cell_width(k);
  }
  double cell_volume() const;
  ParamVector point(int64_t flat) const;

  bool same_grid(const GridSpec& other, double tol = 0.0) const;
};

// Probability masses over a grid's points; normalized to sum to one.
struct DensityGrid {
  GridSpec grid;
  Vector values;

  void renormalize();
};

// Evaluates an (unnormalized, nonnegative) density over the grid in
// parallel and renormalizes the point masses to sum to one.
DensityGrid evaluate_on_grid(const std::function<double(const ParamVector&)>& density,
                             const GridSpec& spec);

}  // namespace abc
