#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace hcube {

// Worker count: HCUBE_THREADS if set (clamped to >= 1), else hardware
// concurrency.
int worker_count();

// Runs fn(shard_index) for shard_index in [0, shard_count). Shards are
// claimed by an atomic counter, so results must be written into
// shard-indexed slots; any later merge over slots in index order is
// then independent of the thread partition.
void run_sharded(std::size_t shard_count,
                 const std::function<void(std::size_t)>& fn);

// Counter-based generator: the value depends only on (seed, counter),
// never on call order.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t counter_rand(std::uint64_t seed, std::uint64_t counter);

// Uniform double in [-1, 1].
double counter_rand_pm1(std::uint64_t seed, std::uint64_t counter);
// Uniform double in [0, 1).
double counter_rand_unit(std::uint64_t seed, std::uint64_t counter);

}  // namespace hcube
