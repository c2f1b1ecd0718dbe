#pragma once

#include <cstddef>
#include <functional>

namespace varregion {

/// Worker count: hardware concurrency, capped by the VARREGION_THREADS
/// environment variable when it holds a positive integer.
std::size_t worker_count();

/// Calls body(i) for i in [0, n) across worker_count() threads with static
/// chunking. Results must be written to per-index slots by the caller. If any
/// call throws, the exception from the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace varregion
