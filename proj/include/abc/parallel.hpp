#pragma once

#include <cstdint>
#include <functional>

namespace abc {

// Global cap on worker threads (0 = hardware concurrency). The experiment
// runner sets this from --jobs; everything else just calls parallel_for.
void set_max_threads(int n);
int max_threads();

// Runs fn over [0, n) partitioned into contiguous blocks, one per worker.
// Results must be written to disjoint, index-addressed slots so the output
// is identical for any thread count. fn receives [begin, end).
void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace abc
