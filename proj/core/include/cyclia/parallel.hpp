#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace cyclia {

// Worker count: CYCLIA_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_count();

// Runs fn(k) for k in [0, n) over contiguous blocks; each index is visited exactly once, so
// results written per index are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cyclia
