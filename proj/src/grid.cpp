#include "abc/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "abc/parallel.hpp"

namespace abc {

int64_t GridSpec::total_points() const {
  int64_t n = 1;
  for (int k = 0; k < dim(); ++k) n *= per_dim_points;
  return n;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int k = 0; k < dim(); ++k) v *= cell_width(k);
  return v;
}

ParamVector GridSpec::point(int64_t flat) const {
  const int k = dim();
  ParamVector p(k);
  for (int d = k - 1; d >= 0; --d) {
    const int idx = static_cast<int>(flat % per_dim_points);
    flat /= per_dim_points;
    p[d] = coord(d, idx);
  }
  return p;
}

bool GridSpec::same_grid(const GridSpec& other, double tol) const {
  if (per_dim_points != other.per_dim_points || dim() != other.dim()) return false;
  for (int k = 0; k < dim(); ++k) {
    if (std::fabs(bounds(k, 0) - other.bounds(k, 0)) > tol) return false;
    if (std::fabs(bounds(k, 1) - other.bounds(k, 1)) > tol) return false;
  }
  return true;
}

void DensityGrid::renormalize() {
  const double total = values.sum();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::runtime_error("DensityGrid: cannot normalize, total mass is zero or non-finite");
  }
  values /= total;
}

DensityGrid evaluate_on_grid(const std::function<double(const ParamVector&)>& density,
                             const GridSpec& spec) {
  DensityGrid out;
  out.grid = spec;
  out.values.resize(spec.total_points());
  parallel_for(spec.total_points(), [&](int64_t begin, int64_t end) {
    for (int64_t i = begin; i < end; ++i) {
      const double v = density(spec.point(i));
      out.values[i] = (std::isfinite(v) && v > 0.0) ? v : 0.0;
    }
  });
  out.renormalize();
  return out;
}

}  // namespace abc
