#pragma once

#include <cstddef>
#include <functional>

namespace fansub {

/// Worker cap: FANSUB_THREADS if set (clamped to >= 1), else the hardware
/// concurrency.
int max_threads();

/// Runs fn(i) for i in [0, n) on up to max_threads() workers. fn must be
/// safe to call concurrently for distinct i; any ordering of results is the
/// caller's job. Exceptions from fn propagate.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fansub
