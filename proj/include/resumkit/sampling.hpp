#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace resumkit {

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Maps a raw 64-bit draw to [0, 1) identically on every platform.
inline double u64_to_unit(std::uint64_t x) { return double(x >> 11) * 0x1.0p-53; }

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent per-stream seed from a root seed.
inline std::uint64_t stream_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t state = root ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
  std::uint64_t s = splitmix64(state);
  return s ^ splitmix64(state);
}

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

/// Chunked Monte-Carlo driver. Sample index space [0, samples) is cut into
/// fixed-size chunks; each chunk gets its own seeded engine and its partial
/// sums are combined in chunk order, so the result does not depend on the
/// thread count.
McEstimate run_chunked_mc(std::uint64_t samples, std::uint64_t seed, int threads,
                          const std::function<double(std::mt19937_64&)>& sample_fn);

/// Runs fn(i) for i in [0, items) across up to `threads` workers.
void parallel_for_index(std::size_t items, int threads, const std::function<void(std::size_t)>& fn);

int resolve_thread_count(int requested);

}  // namespace resumkit
