#pragma once

#include <cstddef>
#include <functional>

namespace nt {

/// std::thread::hardware_concurrency(), at least 1.
unsigned default_jobs();

/// Runs body(i) for every i in [0, count) on up to `jobs` threads. When
/// bodies throw, the exception from the smallest index is rethrown.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace nt
