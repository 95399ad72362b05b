#include "abc/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace abc {

Matrix sample_prior(const UniformBoxPrior& prior, int count, uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_prior: count must be >= 1");
  const int k = prior.dim();
  RandomStream rng(seed);
  Matrix out(count, k);
  for (int i = 0; i < count; ++i) {
    for (int d = 0; d < k; ++d) {
      out(i, d) = rng.next_uniform(prior.lower[d], prior.upper[d]);
    }
  }
  return out;
}

double prior_density(const UniformBoxPrior& prior, const ParamVector& theta) {
  return prior.contains(theta) ? 1.0 / prior.volume() : 0.0;
}

double prior_log_density(const UniformBoxPrior& prior, const ParamVector& theta) {
  return prior.contains(theta) ? -std::log(prior.volume())
                               : -std::numeric_limits<double>::infinity();
}

Standardizer fit_standardizer(const Matrix& rows) {
  const int n = static_cast<int>(rows.rows());
  const int d = static_cast<int>(rows.cols());
  if (n < 2) throw std::invalid_argument("fit_standardizer: need at least 2 vectors");
  Standardizer s;
  s.mean = rows.colwise().mean();
  s.scale = Vector::Ones(d);
  s.constant_dim.assign(static_cast<size_t>(d), false);
  for (int j = 0; j < d; ++j) {
    const double var = (rows.col(j).array() - s.mean[j]).square().sum() / n;
    const double sd = std::sqrt(var);
    if (sd > 0.0 && std::isfinite(sd)) {
      s.scale[j] = sd;
    } else {
      s.constant_dim[static_cast<size_t>(j)] = true;
      s.has_constant_dim = true;
    }
  }
  return s;
}

Vector standardized_distances(const Matrix& summaries, const SummaryVector& s_obs,
                              const Standardizer& std) {
  const Vector s_obs_std = std.transform(s_obs);
  const int n = static_cast<int>(summaries.rows());
  Vector dist(n);
  for (int i = 0; i < n; ++i) {
    dist[i] = (std.transform(summaries.row(i).transpose()) - s_obs_std).norm();
  }
  return dist;
}

namespace {

AcceptedSet select_top_impl(const Matrix& thetas, const Matrix& summaries,
                            const SummaryVector& s_obs, int k, const Standardizer& std) {
  const int n = static_cast<int>(thetas.rows());
  if (k < 1 || k > n) {
    throw std::invalid_argument("select_top: k outside [1, table size] (insufficient budget)");
  }
  const Vector dist = standardized_distances(summaries, s_obs, std);
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return dist[a] < dist[b]; });

  AcceptedSet out;
  out.thetas.resize(k, thetas.cols());
  out.summaries.resize(k, summaries.cols());
  out.distances.resize(k);
  out.source_rows.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int src = order[static_cast<size_t>(i)];
    out.thetas.row(i) = thetas.row(src);
    out.summaries.row(i) = summaries.row(src);
    out.distances[i] = dist[src];
    out.source_rows[static_cast<size_t>(i)] = src;
  }
  out.epsilon = out.distances[k - 1];
  return out;
}

}  // namespace

AcceptedSet select_top(const SimTable& table, const SummaryVector& s_obs, int k,
                       const Standardizer& std) {
  return select_top_impl(table.thetas, table.summaries, s_obs, k, std);
}

AcceptedSet select_top(const SimTable& table, const SummaryVector& s_obs, int k) {
  return select_top_impl(table.thetas, table.summaries, s_obs, k,
                         fit_standardizer(table.summaries));
}

AcceptedSet select_top(const AcceptedSet& accepted, const SummaryVector& s_obs, int k) {
  return select_top_impl(accepted.thetas, accepted.summaries, s_obs, k,
                         fit_standardizer(accepted.summaries));
}

}  // namespace abc
