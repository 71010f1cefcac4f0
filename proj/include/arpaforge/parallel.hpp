#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace arpaforge {

/// Worker count for internal enumeration loops. Reads ARPA_FORGE_THREADS;
/// 0 or unset means one worker per hardware thread.
int thread_budget();

/// Splits [0, n) into contiguous chunks and runs body(begin, end, chunk_index)
/// on each, possibly on several threads. Results must be written into
/// per-chunk slots so that the caller can combine them in chunk order;
/// chunk_count() reports how many slots are needed for a given n.
class ChunkedRange {
public:
    explicit ChunkedRange(std::size_t n);
    std::size_t chunk_count() const { return chunks_; }
    void run(const std::function<void(std::size_t begin, std::size_t end, std::size_t chunk)>& body) const;

private:
    std::size_t n_;
    std::size_t chunks_;
};

}  // namespace arpaforge
