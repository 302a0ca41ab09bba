#include "pdrb/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pdrb {

namespace {
// Set while a thread executes loop bodies; nested loops then run inline.
thread_local bool in_parallel_region = false;
}  // namespace

std::size_t thread_count() {
  std::size_t requested = 0;
  if (const char* env = std::getenv("PDRB_THREADS")) {
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    if (auto [ptr, ec] = std::from_chars(env, end, value); ec == std::errc() && ptr == end)
      requested = value;
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1 || in_parallel_region) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    in_parallel_region = true;
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
    in_parallel_region = false;
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace pdrb
