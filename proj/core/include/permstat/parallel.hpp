#pragma once

#include <cstddef>
#include <functional>

namespace permstat {

/// Worker count used when a caller passes threads = 0.
std::size_t default_thread_count();

/// Runs `task(shard)` for shard = 0..shard_count-1 on up to `threads` workers.
/// Each shard runs exactly once; the first exception thrown is rethrown.
void run_shards(std::size_t shard_count, std::size_t threads,
                const std::function<void(std::size_t shard)>& task);

}  // namespace permstat
