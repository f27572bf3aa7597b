#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace causaldiff {

/// Number of worker threads to use: explicit request, else the
/// CAUSAL_DIFF_THREADS environment variable, else hardware concurrency.
int resolve_threads(int requested = 0);

/// Static block partition of [0, n) over `threads` workers. Each index is
/// processed exactly once and writes only its own outputs, so results are
/// independent of scheduling.
void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t begin, std::int64_t end)>& body);

} // namespace causaldiff
