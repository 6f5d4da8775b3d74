#pragma once

#include <cstddef>
#include <functional>

namespace fairaudit {

// Worker count used by parallel_for: FAIRAUDIT_THREADS when set, otherwise
// the hardware concurrency.
unsigned worker_count();

// Runs fn(i) for i in [0, n). Each index must write only its own slot(s) so
// the result is identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fairaudit
