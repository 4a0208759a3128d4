#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace levelcover {

/// Worker cap: LEVELCOVER_THREADS when set to a positive integer, else the hardware concurrency.
unsigned worker_count();

/// Runs fn(0) .. fn(tasks-1) on up to worker_count() threads. Tasks must write only
/// to their own slots; the first failing task (by index) has its exception rethrown.
void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& fn);

}  // namespace levelcover
