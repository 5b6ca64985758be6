#pragma once

#include <cstddef>
#include <functional>

namespace injwords {

/// Worker count from INJWORDS_JOBS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t default_jobs();

/// Runs body(0..count-1) on up to `jobs` threads. Every index runs even if
/// some throw; afterwards the exception from the lowest failing index is
/// rethrown.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body);

}  // namespace injwords
