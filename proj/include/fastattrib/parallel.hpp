#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace fastattrib {

/// Process-wide worker count. 0 = hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs fn(i) for i in [0, n). Each index owns its output slot, so callers
/// that gather results by index get bit-identical output for any thread
/// count. Exceptions from workers are rethrown on the calling thread.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace fastattrib
