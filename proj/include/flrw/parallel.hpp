#pragma once

#include <cstddef>
#include <functional>

namespace flrw {

/// Worker count from FLRW_THREADS (positive integer), else the hardware
/// concurrency. Always >= 1.
std::size_t thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads. Each index
/// runs exactly once; callers write results to slot i and reduce afterwards
/// in index order, so results do not depend on the thread count. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace flrw
