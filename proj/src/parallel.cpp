#include "mdlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace mdlab {

namespace {
std::atomic<unsigned> g_threads{0};

unsigned from_environment() {
  if (const char* env = std::getenv("MDLAB_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}
} // namespace

unsigned thread_count() {
  unsigned n = g_threads.load();
  return n ? n : from_environment();
}

void set_thread_count(unsigned n) { g_threads.store(n); }

std::size_t parallel_chunks(std::size_t count,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                            std::size_t min_chunk) {
  if (count == 0) return 0;
  std::size_t by_size = (count + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1);
  std::size_t chunks = std::clamp<std::size_t>(by_size, 1, thread_count());
  if (chunks == 1) {
    body(0, count, 0);
    return 1;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(chunks);
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = count * c / chunks;
    std::size_t end = count * (c + 1) / chunks;
    workers.emplace_back([&, begin, end, c] {
      try {
        body(begin, end, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return chunks;
}

} // namespace mdlab
