#pragma once

#include <cstddef>
#include <functional>

namespace qamgolay {

/// Worker cap from QAMGOLAY_THREADS (0 or unset means all hardware threads).
int worker_count();

/// Runs fn(i) for i in [0, n) across workers. Each index owns its output
/// slot, so results are deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace qamgolay
