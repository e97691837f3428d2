#pragma once

#include <cstddef>
#include <functional>

namespace qdf {

/// Worker cap resolved from the DROPLET_FALL_THREADS environment variable
/// (0 or unset = hardware concurrency).
std::size_t max_threads();

/// Runs fn(i) for i in [0, count) across up to max_threads() workers.
/// Work items must be independent; any exception is rethrown on the caller
/// thread after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qdf
