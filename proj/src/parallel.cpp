#include "causaldiff/parallel.hpp"

#include <cstdlib>
#include <string>

namespace causaldiff {

int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("CAUSAL_DIFF_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            return n;
        }
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t, std::int64_t)>& body) {
    threads = resolve_threads(threads);
    if (n <= 0) {
        return;
    }
    if (threads <= 1 || n < 2) {
        body(0, n);
        return;
    }
    const std::int64_t workers = std::min<std::int64_t>(threads, n);
    const std::int64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(n, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace causaldiff
