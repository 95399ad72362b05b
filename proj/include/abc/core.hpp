#pragma once

#include <cstdint>

#include "abc/random.hpp"
#include "abc/types.hpp"

namespace abc {

// Draws `count` points from the box prior; deterministic given seed.
// Returned matrix is count x K, one point per row.
Matrix sample_prior(const UniformBoxPrior& prior, int count, uint64_t seed);

double prior_density(const UniformBoxPrior& prior, const ParamVector& theta);
double prior_log_density(const UniformBoxPrior& prior, const ParamVector& theta);

// Fits the per-dimension affine standardizer (1/n variance). Dimensions
// with zero spread are flagged and left at scale 1.
Standardizer fit_standardizer(const Matrix& rows);

// Euclidean distances in standardized summary space.
Vector standardized_distances(const Matrix& summaries, const SummaryVector& s_obs,
                              const Standardizer& std);

// Retains the k rows closest to s_obs, distances computed in standardized
// summary space; ties broken by row order. epsilon = k-th smallest distance.
AcceptedSet select_top(const SimTable& table, const SummaryVector& s_obs, int k,
                       const Standardizer& std);

// Convenience overloads: fit the standardizer on the table's own summaries.
AcceptedSet select_top(const SimTable& table, const SummaryVector& s_obs, int k);
AcceptedSet select_top(const AcceptedSet& accepted, const SummaryVector& s_obs, int k);

}  // namespace abc
