#pragma once

#include <cstddef>
#include <functional>

namespace brauerlie {

// Worker count from BRAUERLIE_THREADS (default 1).
unsigned thread_count();

// Runs fn(i) for i in [0, n).  Each index is handled exactly once; callers
// write results into preallocated slots so assembly order stays fixed.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace brauerlie
