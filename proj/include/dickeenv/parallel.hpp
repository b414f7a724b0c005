#pragma once

#include <cstddef>
#include <functional>

namespace dickeenv {

/// Worker count: min(hardware concurrency, DICKE_ENV_THREADS when set to a
/// positive integer). Always >= 1.
int worker_count();

/// Runs fn(i) for i in [0, n) across workers. Each index writes only its own
/// output slot, so results are bit-identical regardless of worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace dickeenv
