#pragma once

#include <cstddef>
#include <functional>

namespace dcenter {

/// Worker count: DCENTER_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// handed out in order; the first exception is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace dcenter
