#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace wheelzeta {

/// Environment variable that overrides any requested worker count.
inline constexpr const char* kWorkersEnvVar = "WHEELZETA_WORKERS";

/// Resolve a worker count: env var beats the request, 0 means "all cores".
inline int resolve_workers(int requested) {
  if (const char* env = std::getenv(kWorkersEnvVar)) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
  if (requested >= 1) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run `body(block)` for block = 0..num_blocks-1 on up to `workers` threads.
/// Blocks are claimed through a shared counter; callers make the result
/// deterministic by writing into per-block slots and merging in block order.
inline void run_blocks(std::int64_t num_blocks, int workers,
                       const std::function<void(std::int64_t)>& body) {
  workers = static_cast<int>(
      std::max<std::int64_t>(1, std::min<std::int64_t>(workers, num_blocks)));
  if (workers == 1) {
    for (std::int64_t b = 0; b < num_blocks; ++b) body(b);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto drain = [&] {
    try {
      for (;;) {
        const std::int64_t b = next.fetch_add(1);
        if (b >= num_blocks) return;
        body(b);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wheelzeta
