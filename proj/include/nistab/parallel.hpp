#pragma once

#include <cstddef>
#include <functional>

namespace nistab {

// Number of worker threads: NI_NUM_THREADS if set and positive, otherwise
// std::thread::hardware_concurrency().
std::size_t worker_count();

// Runs fn(i) for i in [0, n). fn must only write to state owned by index i;
// under that contract the result is identical to the serial loop regardless
// of thread count. Exceptions from workers are rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}
