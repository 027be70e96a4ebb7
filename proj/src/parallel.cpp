#include "hcube/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hcube {

int worker_count() {
  if (const char* env = std::getenv("HCUBE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void run_sharded(std::size_t shard_count,
                 const std::function<void(std::size_t)>& fn) {
  std::size_t workers = static_cast<std::size_t>(worker_count());
  if (workers > shard_count) workers = shard_count;
  if (workers <= 1) {
    for (std::size_t s = 0; s < shard_count; ++s) fn(s);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t s = next.fetch_add(1);
        if (s >= shard_count) return;
        fn(s);
      }
    });
  }
  for (auto& th : pool) th.join();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_rand(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(splitmix64(seed ^ 0x5851f42d4c957f2dULL) +
                    counter * 0xd1b54a32d192ed03ULL);
}

double counter_rand_unit(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(counter_rand(seed, counter) >> 11) * 0x1.0p-53;
}

double counter_rand_pm1(std::uint64_t seed, std::uint64_t counter) {
  return 2.0 * counter_rand_unit(seed, counter) - 1.0;
}

}  // namespace hcube
