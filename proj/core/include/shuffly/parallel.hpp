#pragma once

#include <cstddef>
#include <functional>

namespace shuffly {

// Number of concurrent workers; capped by the SHUFFLY_THREADS environment
// variable when set.
unsigned worker_count();

// Runs fn(0..n-1) across workers. Callers own determinism by writing results
// into index-addressed slots; this function only guarantees all indices ran.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace shuffly
