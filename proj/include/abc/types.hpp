#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace abc {

// K-dimensional model parameter point and D-dimensional summary statistic.
// Kept as dense vectors; dimensions are constant within a run.
using ParamVector = Eigen::VectorXd;
using SummaryVector = Eigen::VectorXd;

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Flat, independent prior over a box: density 1/volume inside, 0 outside.
struct UniformBoxPrior {
  Vector lower;
  Vector upper;

  UniformBoxPrior() = default;
  UniformBoxPrior(Vector lo, Vector hi);

  int dim() const { return static_cast<int>(lower.size()); }
  double volume() const;
  bool contains(const ParamVector& theta) const;
};

// Per-dimension affine transform bringing a sample set to zero mean and
// unit variance (1/n variance convention). Dimensions with zero spread are
// flagged and left at scale 1.
struct Standardizer {
  Vector mean;
  Vector scale;
  std::vector<bool> constant_dim;
  bool has_constant_dim = false;

  int dim() const { return static_cast<int>(mean.size()); }
  Vector transform(const Vector& v) const;
  Vector inverse(const Vector& v) const;
  Matrix transform_rows(const Matrix& rows) const;
  Matrix inverse_rows(const Matrix& rows) const;

  static Standardizer identity(int dim);
};

// Simulation table: row i holds (theta_i, summary_i) in generation order.
struct SimTable {
  Matrix thetas;     // n x K
  Matrix summaries;  // n x D
  std::string provenance;
  uint64_t seed = 0;

  int size() const { return static_cast<int>(thetas.rows()); }
  int param_dim() const { return static_cast<int>(thetas.cols()); }
  int summary_dim() const { return static_cast<int>(summaries.cols()); }
};

// Distance-ascending retained subset of a SimTable. epsilon is the largest
// retained distance; source_rows keeps the original row indices (ties are
// broken by generation order).
struct AcceptedSet {
  Matrix thetas;
  Matrix summaries;
  Vector distances;
  double epsilon = 0.0;
  std::vector<int> source_rows;

  int size() const { return static_cast<int>(thetas.rows()); }
  int param_dim() const { return static_cast<int>(thetas.cols()); }
  int summary_dim() const { return static_cast<int>(summaries.cols()); }
};

// Extension point for data-generating processes: theta plus a seed map to a
// summary vector. Implementations must be pure (safe to call concurrently).
class SummarySimulator {
 public:
  virtual ~SummarySimulator() = default;
  virtual int param_dim() const = 0;
  virtual int summary_dim() const = 0;
  virtual SummaryVector simulate_summary(const ParamVector& theta, uint64_t seed) const = 0;
};

}  // namespace abc
