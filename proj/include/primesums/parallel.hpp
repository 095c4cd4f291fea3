#pragma once

#include <cstddef>
#include <functional>

namespace primesums {

/// Worker count used by every parallel sweep. Zero means hardware concurrency.
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers write
/// results into slot i so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace primesums
