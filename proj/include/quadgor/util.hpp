#pragma once

#include <cstdint>
#include <functional>

#include "quadgor/rational.hpp"

namespace qg {

// splitmix64. Self-contained so that seeded runs are reproducible across
// platforms and standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

BigInt binomial(long long n, long long k);

// Worker cap from QG_THREADS (>= 1); falls back to hardware concurrency.
unsigned worker_count();

// Runs fn(i) for i in [0, count) on up to worker_count() threads. Callers
// write results into slot i of a preallocated buffer, so the merge is
// deterministic regardless of scheduling.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qg
