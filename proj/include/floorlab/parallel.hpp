#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "floorlab/numeric.hpp"

namespace floorlab {

/// Worker count: FLOORLAB_WORKERS when set (>= 1), otherwise the hardware
/// concurrency, at least 1.
unsigned default_workers();

/// Contiguous, gap-free partition of [lo, hi] into at most parts chunks.
std::vector<std::pair<Int, Int>> split_range(const Int& lo, const Int& hi, unsigned parts);

/// Runs fn(0..count-1) on up to `workers` threads. Callers keep results in
/// per-index slots so the merged output is independent of scheduling.
void parallel_for_index(size_t count, unsigned workers, const std::function<void(size_t)>& fn);

}  // namespace floorlab
