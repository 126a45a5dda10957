#pragma once

#include <cstddef>
#include <functional>

namespace mdcalc {

/// Worker count: hardware concurrency, capped by MDCALC_THREADS when set.
int worker_count();

/// Calls body(i) for every i in [0, n) across worker_count() threads.
/// Indices are handed out in contiguous blocks; the first exception thrown
/// by any worker is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mdcalc
