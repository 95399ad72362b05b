#pragma once

#include <cstdint>
#include <string>

#include "abc/grid.hpp"
#include "abc/types.hpp"

namespace abc {

enum class BenchmarkKind { GcToy, Mg1, Ma2, LotkaVolterra };

std::string benchmark_name(BenchmarkKind kind);
BenchmarkKind benchmark_from_name(const std::string& name);

struct BenchmarkModel {
  BenchmarkKind kind = BenchmarkKind::Ma2;
  ParamVector true_theta;
  UniformBoxPrior prior;
  int obs_size = 200;

  // Lotka-Volterra options: summaries default to the raw records after t=0;
  // the first-difference variant is kept behind a switch.
  bool lv_use_differences = false;
  int64_t lv_max_events = 1'000'000;

  int param_dim() const { return static_cast<int>(true_theta.size()); }
  int summary_dim() const;
};

// Canonical configuration (true parameters, prior, observation size).
BenchmarkModel make_benchmark(BenchmarkKind kind);

// Simulated raw data. Layout per model:
//   GcToy 200x2, Mg1 200x1, Ma2 200x1, LotkaVolterra 41x2 (t = 0.0..8.0).
// truncated is set when the Gillespie event cap was hit; remaining records
// then hold the last state.
struct RawData {
  Matrix series;
  bool truncated = false;
};

RawData simulate(const BenchmarkModel& model, const ParamVector& theta, uint64_t seed);

SummaryVector summarize(const BenchmarkModel& model, const RawData& raw);

// Adapter exposing a benchmark through the generic simulator interface.
class BenchmarkSimulator : public SummarySimulator {
 public:
  explicit BenchmarkSimulator(BenchmarkModel model) : model_(std::move(model)) {}
  int param_dim() const override { return model_.param_dim(); }
  int summary_dim() const override { return model_.summary_dim(); }
  SummaryVector simulate_summary(const ParamVector& theta, uint64_t seed) const override {
    return summarize(model_, simulate(model_, theta, seed));
  }
  const BenchmarkModel& model() const { return model_; }

 private:
  BenchmarkModel model_;
};

// Analytic posterior of the GC toy model: exp(sum_i log p(x_i|theta) +
// log prior) evaluated at the grid's cell centers and renormalized to sum
// to one. Points outside the prior box get zero mass.
DensityGrid gc_toy_true_posterior(const RawData& x_obs, const UniformBoxPrior& prior,
                                  const GridSpec& grid);

// Inverse CDF of Beta(a, 2), whose CDF is (a+1)x^a - a x^(a+1); solved by
// bisection on [0,1] to 1e-12.
double beta_a2_inv_cdf(double u, double a);
double beta_a2_cdf(double x, double a);
double beta_a2_log_pdf(double x, double a);

// Two-component normal mixture w*N(1,1) + (1-w)*N(4,0.25) (variance
// convention); CDF, log-pdf and bisection inverse CDF.
double gc_mixture_cdf(double x, double w);
double gc_mixture_log_pdf(double x, double w);
double gc_mixture_inv_cdf(double u, double w);

}  // namespace abc
