#include "abc/simulators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "abc/random.hpp"
#include "abc/stats.hpp"

namespace abc {

namespace {

Vector make_vec(std::initializer_list<double> v) {
  Vector out(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

// Quantiles at levels j/(q+1), j = 1..q, of a sample (linear interpolation).
Vector interior_quantiles(std::vector<double> values, int q) {
  std::sort(values.begin(), values.end());
  Vector out(q);
  for (int j = 1; j <= q; ++j) {
    out[j - 1] = quantile_sorted(values, static_cast<double>(j) / (q + 1));
  }
  return out;
}

// Pearson correlation of normal scores built from smoothed empirical ranks
// (rank / (n+1), average rank for ties).
double normal_scores_correlation(std::span<const double> x, std::span<const double> y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n1 = static_cast<double>(x.size()) + 1.0;
  std::vector<double> zx(x.size()), zy(y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    zx[i] = std_normal_quantile(rx[i] / n1);
    zy[i] = std_normal_quantile(ry[i] / n1);
  }
  return pearson_correlation(zx, zy);
}

constexpr int kLvRecords = 41;  // t = 0.0, 0.2, ..., 8.0
constexpr double kLvRecordStep = 0.2;

RawData simulate_gc_toy(const BenchmarkModel& model, const ParamVector& theta,
                        RandomStream& rng) {
  const double a = theta[0];
  const double w = theta[1];
  const double rho = theta[2];
  const double cross = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  RawData raw;
  raw.series.resize(model.obs_size, 2);
  for (int i = 0; i < model.obs_size; ++i) {
    const double e1 = rng.next_normal();
    const double e2 = rng.next_normal();
    const double z1 = e1;
    const double z2 = rho * e1 + cross * e2;
    raw.series(i, 0) = beta_a2_inv_cdf(std_normal_cdf(z1), a);
    raw.series(i, 1) = gc_mixture_inv_cdf(std_normal_cdf(z2), w);
  }
  return raw;
}

RawData simulate_mg1(const BenchmarkModel& model, const ParamVector& theta,
                     RandomStream& rng) {
  const double t1 = theta[0];
  const double t2 = theta[1];
  const double rate = theta[2];
  RawData raw;
  raw.series.resize(model.obs_size, 1);
  double arrival = 0.0;  // v_0
  double done = 0.0;     // d_0
  for (int i = 0; i < model.obs_size; ++i) {
    const double service = t1 + t2 * rng.next_double();
    double gap;
    if (rate > 0.0) {
      gap = rng.next_exponential(rate);
    } else {
      // Degenerate rate: one arrival at t = 0, none afterwards.
      gap = (i == 0) ? 0.0 : std::numeric_limits<double>::infinity();
    }
    arrival += gap;
    const double interval = service + std::max(0.0, arrival - done);
    done += interval;
    raw.series(i, 0) = interval;
  }
  return raw;
}

RawData simulate_ma2(const BenchmarkModel& model, const ParamVector& theta,
                     RandomStream& rng) {
  const double t1 = theta[0];
  const double t2 = theta[1];
  const int n = model.obs_size;
  std::vector<double> w(static_cast<size_t>(n) + 2);
  for (auto& v : w) v = rng.next_normal();
  RawData raw;
  raw.series.resize(n, 1);
  for (int t = 0; t < n; ++t) {
    raw.series(t, 0) = w[t + 2] + t1 * w[t + 1] + t2 * w[t];
  }
  return raw;
}

RawData simulate_lv(const BenchmarkModel& model, const ParamVector& theta,
                    RandomStream& rng) {
  // Gillespie simulation of the predator-prey jump process. X predators,
  // Y prey; predator birth and prey death share the rate constant e^theta1.
  const double c1 = std::exp(theta[0]);
  const double c2 = std::exp(theta[1]);
  const double c3 = std::exp(theta[2]);
  long long x = 50, y = 100;
  double t = 0.0;
  int next_record = 0;
  int64_t events = 0;
  RawData raw;
  raw.series.resize(kLvRecords, 2);
  auto record_until = [&](double up_to) {
    while (next_record < kLvRecords && next_record * kLvRecordStep <= up_to) {
      raw.series(next_record, 0) = static_cast<double>(x);
      raw.series(next_record, 1) = static_cast<double>(y);
      ++next_record;
    }
  };
  const double t_end = (kLvRecords - 1) * kLvRecordStep;
  while (next_record < kLvRecords) {
    const double xy = static_cast<double>(x) * static_cast<double>(y);
    const double a1 = c1 * xy;                        // predator born
    const double a2 = c2 * static_cast<double>(x);    // predator dies
    const double a3 = c3 * static_cast<double>(y);    // prey born
    const double a4 = c1 * xy;                        // prey eaten
    const double total = a1 + a2 + a3 + a4;
    if (total <= 0.0) break;  // absorbed; populations frozen
    if (events >= model.lv_max_events) {
      raw.truncated = true;
      break;
    }
    const double t_next = t + rng.next_exponential(total);
    record_until(std::min(t_next, t_end));  // state holds on [t, t_next)
    if (t_next > t_end) break;
    const double pick = rng.next_double() * total;
    if (pick < a1) {
      ++x;
    } else if (pick < a1 + a2) {
      --x;
    } else if (pick < a1 + a2 + a3) {
      ++y;
    } else {
      --y;
    }
    ++events;
    t = t_next;
  }
  record_until(t_end);
  return raw;
}

SummaryVector summarize_gc_toy(const BenchmarkModel& model, const RawData& raw) {
  const int n = static_cast<int>(raw.series.rows());
  std::vector<double> x1(raw.series.col(0).data(), raw.series.col(0).data() + n);
  std::vector<double> x2(raw.series.col(1).data(), raw.series.col(1).data() + n);
  SummaryVector s(model.summary_dim());
  s.segment(0, 20) = interior_quantiles(x1, 20);
  s.segment(20, 20) = interior_quantiles(x2, 20);
  s[40] = normal_scores_correlation(x1, x2);
  return s;
}

SummaryVector summarize_mg1(const BenchmarkModel&, const RawData& raw) {
  const int n = static_cast<int>(raw.series.rows());
  std::vector<double> x(raw.series.col(0).data(), raw.series.col(0).data() + n);
  return interior_quantiles(x, 16);
}

SummaryVector summarize_ma2(const BenchmarkModel&, const RawData& raw) {
  const int n = static_cast<int>(raw.series.rows());
  const double m = raw.series.col(0).mean();
  SummaryVector s(2);
  for (int lag = 1; lag <= 2; ++lag) {
    double acc = 0.0;
    for (int t = 0; t + lag < n; ++t) {
      acc += (raw.series(t, 0) - m) * (raw.series(t + lag, 0) - m);
    }
    s[lag - 1] = acc / n;
  }
  return s;
}

SummaryVector summarize_lv(const BenchmarkModel& model, const RawData& raw) {
  const int m = kLvRecords - 1;  // records after t = 0
  SummaryVector s(2 * m);
  for (int i = 0; i < m; ++i) {
    if (model.lv_use_differences) {
      s[i] = raw.series(i + 1, 0) - raw.series(i, 0);
      s[m + i] = raw.series(i + 1, 1) - raw.series(i, 1);
    } else {
      s[i] = raw.series(i + 1, 0);
      s[m + i] = raw.series(i + 1, 1);
    }
  }
  return s;
}

}  // namespace

std::string benchmark_name(BenchmarkKind kind) {
  switch (kind) {
    case BenchmarkKind::GcToy: return "gc_toy";
    case BenchmarkKind::Mg1: return "mg1";
    case BenchmarkKind::Ma2: return "ma2";
    case BenchmarkKind::LotkaVolterra: return "lv";
  }
  throw std::logic_error("benchmark_name: unknown kind");
}

BenchmarkKind benchmark_from_name(const std::string& name) {
  if (name == "gc_toy") return BenchmarkKind::GcToy;
  if (name == "mg1") return BenchmarkKind::Mg1;
  if (name == "ma2") return BenchmarkKind::Ma2;
  if (name == "lv") return BenchmarkKind::LotkaVolterra;
  throw std::invalid_argument("unknown benchmark: " + name);
}

int BenchmarkModel::summary_dim() const {
  switch (kind) {
    case BenchmarkKind::GcToy: return 41;
    case BenchmarkKind::Mg1: return 16;
    case BenchmarkKind::Ma2: return 2;
    case BenchmarkKind::LotkaVolterra: return 80;
  }
  throw std::logic_error("summary_dim: unknown kind");
}

BenchmarkModel make_benchmark(BenchmarkKind kind) {
  BenchmarkModel m;
  m.kind = kind;
  switch (kind) {
    case BenchmarkKind::GcToy:
      m.true_theta = make_vec({6.0, 0.5, 0.6});
      m.prior = UniformBoxPrior(make_vec({0.5, 0.0, 0.4}), make_vec({12.5, 1.0, 0.8}));
      m.obs_size = 200;
      break;
    case BenchmarkKind::Mg1:
      m.true_theta = make_vec({1.0, 4.0, 0.2});
      m.prior = UniformBoxPrior(make_vec({0.0, 2.0, 0.0}), make_vec({10.0, 6.0, 0.33}));
      m.obs_size = 200;
      break;
    case BenchmarkKind::Ma2:
      m.true_theta = make_vec({0.6, 0.2});
      m.prior = UniformBoxPrior(make_vec({0.0, 0.0}), make_vec({1.0, 1.0}));
      m.obs_size = 200;
      break;
    case BenchmarkKind::LotkaVolterra:
      m.true_theta = make_vec({std::log(0.01), std::log(0.5), 0.0});
      m.prior = UniformBoxPrior(make_vec({-5.0, -1.0, -1.0}), make_vec({-1.0, 1.0, 1.0}));
      m.obs_size = kLvRecords;
      break;
  }
  return m;
}

RawData simulate(const BenchmarkModel& model, const ParamVector& theta, uint64_t seed) {
  if (theta.size() != model.true_theta.size()) {
    throw std::invalid_argument("simulate: theta dimension mismatch");
  }
  RandomStream rng(seed);
  switch (model.kind) {
    case BenchmarkKind::GcToy: return simulate_gc_toy(model, theta, rng);
    case BenchmarkKind::Mg1: return simulate_mg1(model, theta, rng);
    case BenchmarkKind::Ma2: return simulate_ma2(model, theta, rng);
    case BenchmarkKind::LotkaVolterra: return simulate_lv(model, theta, rng);
  }
  throw std::logic_error("simulate: unknown kind");
}

SummaryVector summarize(const BenchmarkModel& model, const RawData& raw) {
  switch (model.kind) {
    case BenchmarkKind::GcToy: return summarize_gc_toy(model, raw);
    case BenchmarkKind::Mg1: return summarize_mg1(model, raw);
    case BenchmarkKind::Ma2: return summarize_ma2(model, raw);
    case BenchmarkKind::LotkaVolterra: return summarize_lv(model, raw);
  }
  throw std::logic_error("summarize: unknown kind");
}

DensityGrid gc_toy_true_posterior(const RawData& x_obs, const UniformBoxPrior& prior,
                                  const GridSpec& grid) {
  const int n = static_cast<int>(x_obs.series.rows());
  if (x_obs.series.cols() != 2 || n < 1) {
    throw std::invalid_argument("gc_toy_true_posterior: expected n x 2 observed data");
  }
  for (int i = 0; i < n; ++i) {
    const double x1 = x_obs.series(i, 0);
    if (!(x1 > 0.0 && x1 < 1.0)) {
      throw std::invalid_argument("gc_toy_true_posterior: first marginal must lie in (0,1)");
    }
  }
  if (grid.dim() != 3) throw std::invalid_argument("gc_toy_true_posterior: grid must be 3-D");

  const int p = grid.per_dim_points;
  const auto clamp_u = [](double u) { return std::clamp(u, 1e-12, 1.0 - 1e-12); };

  // Latent scores and marginal log-likelihood terms depend on one axis each;
  // cache them per axis value so the grid sweep is cheap.
  Matrix z1(p, n), z2(p, n);
  Vector logf1 = Vector::Constant(p, -std::numeric_limits<double>::infinity());
  Vector logf2 = Vector::Constant(p, -std::numeric_limits<double>::infinity());
  Vector s1(p), s2(p);
  std::vector<bool> ok1(static_cast<size_t>(p), false), ok2(static_cast<size_t>(p), false);
  for (int i1 = 0; i1 < p; ++i1) {
    const double a = grid.coord(0, i1);
    if (!(a > 0.0)) continue;
    ok1[static_cast<size_t>(i1)] = true;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = x_obs.series(i, 0);
      z1(i1, i) = std_normal_quantile(clamp_u(beta_a2_cdf(x, a)));
      acc += beta_a2_log_pdf(x, a);
    }
    logf1[i1] = acc;
    s1[i1] = z1.row(i1).squaredNorm();
  }
  for (int i2 = 0; i2 < p; ++i2) {
    const double w = grid.coord(1, i2);
    if (w < 0.0 || w > 1.0) continue;
    ok2[static_cast<size_t>(i2)] = true;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = x_obs.series(i, 1);
      z2(i2, i) = std_normal_quantile(clamp_u(gc_mixture_cdf(x, w)));
      acc += gc_mixture_log_pdf(x, w);
    }
    logf2[i2] = acc;
    s2[i2] = z2.row(i2).squaredNorm();
  }
  const Matrix cross = z1 * z2.transpose();  // p x p, entry (i1,i2) = sum_i z1*z2

  DensityGrid out;
  out.grid = grid;
  out.values = Vector::Zero(grid.total_points());
  Vector loglik = Vector::Constant(grid.total_points(),
                                   -std::numeric_limits<double>::infinity());
  double best = -std::numeric_limits<double>::infinity();
  const double log_prior = -std::log(prior.volume());
  int64_t flat = 0;
  for (int i1 = 0; i1 < p; ++i1) {
    for (int i2 = 0; i2 < p; ++i2) {
      for (int i3 = 0; i3 < p; ++i3, ++flat) {
        const double rho = grid.coord(2, i3);
        ParamVector theta(3);
        theta << grid.coord(0, i1), grid.coord(1, i2), rho;
        if (!prior.contains(theta) || !ok1[static_cast<size_t>(i1)] ||
            !ok2[static_cast<size_t>(i2)] || std::fabs(rho) >= 1.0) {
          continue;
        }
        const double r2 = 1.0 - rho * rho;
        const double copula = -0.5 * n * std::log(r2) -
                              (rho * rho * (s1[i1] + s2[i2]) - 2.0 * rho * cross(i1, i2)) /
                                  (2.0 * r2);
        loglik[flat] = copula + logf1[i1] + logf2[i2] + log_prior;
        best = std::max(best, loglik[flat]);
      }
    }
  }
  if (!std::isfinite(best)) {
    throw std::runtime_error("gc_toy_true_posterior: no grid point has positive density");
  }
  for (int64_t i = 0; i < grid.total_points(); ++i) {
    if (std::isfinite(loglik[i])) out.values[i] = std::exp(loglik[i] - best);
  }
  out.renormalize();
  return out;
}

double beta_a2_cdf(double x, double a) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double xa = std::exp(a * std::log(x));
  return xa * ((a + 1.0) - a * x);
}

double beta_a2_log_pdf(double x, double a) {
  if (x <= 0.0 || x >= 1.0) return -std::numeric_limits<double>::infinity();
  return std::log(a * (a + 1.0)) + (a - 1.0) * std::log(x) + std::log1p(-x);
}

double beta_a2_inv_cdf(double u, double a) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (beta_a2_cdf(mid, a) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double gc_mixture_cdf(double x, double w) {
  return w * std_normal_cdf(x - 1.0) + (1.0 - w) * std_normal_cdf((x - 4.0) / 0.5);
}

double gc_mixture_log_pdf(double x, double w) {
  const double p = w * std_normal_pdf(x - 1.0) +
                   (1.0 - w) * std_normal_pdf((x - 4.0) / 0.5) / 0.5;
  return p > 0.0 ? std::log(p) : -std::numeric_limits<double>::infinity();
}

double gc_mixture_inv_cdf(double u, double w) {
  double lo = -12.0, hi = 14.0;
  if (u <= gc_mixture_cdf(lo, w)) return lo;
  if (u >= gc_mixture_cdf(hi, w)) return hi;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (gc_mixture_cdf(mid, w) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace abc
