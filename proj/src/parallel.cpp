#include "arpaforge/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace arpaforge {

int thread_budget() {
    const char* env = std::getenv("ARPA_FORGE_THREADS");
    long requested = 0;
    if (env && *env) {
        try {
            requested = std::stol(env);
        } catch (...) {
            requested = 0;
        }
    }
    if (requested < 0) requested = 1;
    if (requested == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        requested = hw ? static_cast<long>(hw) : 1;
    }
    return static_cast<int>(std::min<long>(requested, 64));
}

namespace {
constexpr std::size_t kMinChunk = 64;  // below this, threading costs more than it saves
}

ChunkedRange::ChunkedRange(std::size_t n) : n_(n) {
    std::size_t budget = static_cast<std::size_t>(thread_budget());
    chunks_ = std::min(budget, std::max<std::size_t>(1, n / kMinChunk));
    if (chunks_ == 0) chunks_ = 1;
}

void ChunkedRange::run(
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body) const {
    if (chunks_ == 1) {
        body(0, n_, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks_);
    std::size_t per = n_ / chunks_;
    std::size_t extra = n_ % chunks_;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks_; ++c) {
        std::size_t len = per + (c < extra ? 1 : 0);
        std::size_t end = begin + len;
        pool.emplace_back([&body, begin, end, c] { body(begin, end, c); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace arpaforge
