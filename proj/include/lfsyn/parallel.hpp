#pragma once

#include <cstddef>
#include <functional>

namespace lfsyn {

/// Worker count from LFSYN_THREADS, else the hardware concurrency (at least 1).
int thread_count();

/// Runs body(i) for i in [0, n). Iterations must be independent; results are
/// identical for any thread count. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace lfsyn
