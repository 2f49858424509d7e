#pragma once

#include <cstddef>
#include <functional>

namespace qwalk {

/// Worker count: hardware concurrency, capped by the QW_THREADS environment
/// variable when set.
unsigned max_threads();

/// Run fn(i) for i in [0, n) over a static partition of worker threads.
/// Callers write to disjoint slots, so results do not depend on the
/// partition. Falls back to a plain loop for small n or a single worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qwalk
