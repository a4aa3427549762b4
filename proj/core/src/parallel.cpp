#include "permstat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace permstat {

std::size_t default_thread_count() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void run_shards(std::size_t shard_count, std::size_t threads,
                const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = default_thread_count();
  threads = std::min(threads, shard_count);
  if (threads <= 1) {
    for (std::size_t s = 0; s < shard_count; ++s) task(s);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t s = next++; s < shard_count; s = next++) {
          try {
            task(s);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace permstat
