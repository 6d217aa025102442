#include "resumkit/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace resumkit {

namespace {
constexpr std::uint64_t kChunkSize = 1 << 16;
}

McEstimate run_chunked_mc(std::uint64_t samples, std::uint64_t seed, int threads,
                          const std::function<double(std::mt19937_64&)>& sample_fn) {
  if (samples == 0) throw std::invalid_argument("run_chunked_mc: samples must be >= 1");
  const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkSums> partial(chunks);

  parallel_for_index(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t count = std::min(kChunkSize, samples - begin);
    std::mt19937_64 rng(stream_seed(seed, c));
    ChunkSums sums;
    for (std::uint64_t k = 0; k < count; ++k) {
      const double x = sample_fn(rng);
      sums.sum += x;
      sums.sum_sq += x * x;
    }
    partial[c] = sums;
  });

  double sum = 0.0, sum_sq = 0.0;
  for (const ChunkSums& s : partial) {
    sum += s.sum;
    sum_sq += s.sum_sq;
  }
  const double n = double(samples);
  const double mean = sum / n;
  McEstimate out;
  out.estimate = mean;
  if (samples > 1) {
    double var = (sum_sq - sum * sum / n) / (n - 1.0);
    if (var < 0.0) var = 0.0;  // rounding near zero variance
    out.std_error = std::sqrt(var / n);
  }
  return out;
}

void parallel_for_index(std::size_t items, int threads,
                        const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(std::max(threads, 1), items == 0 ? 1 : items);
  if (workers <= 1) {
    for (std::size_t i = 0; i < items; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RESUMKIT_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 1;
}

}  // namespace resumkit
