#pragma once

#include <cstddef>
#include <functional>

namespace mdlab {

/// Worker count used by every engine. Resolution order: explicit
/// set_thread_count(), then the MDLAB_THREADS environment variable, then
/// std::thread::hardware_concurrency().
unsigned thread_count();
void set_thread_count(unsigned n);

/// Splits [0, count) into at most thread_count() contiguous chunks and runs
/// body(begin, end, chunk_index) for each. Chunks are numbered in index
/// order so callers can merge partial results deterministically.
/// Returns the number of chunks used.
std::size_t parallel_chunks(std::size_t count,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                            std::size_t min_chunk = 1 << 16);

} // namespace mdlab
