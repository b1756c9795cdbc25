#pragma once

// Block-scheduled parallel loop for the range searches. Workers pull
// fixed-size blocks from a shared counter; the callback sees [begin, end).
// Callers merge per-block results themselves, so output order never
// depends on the thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cheb {

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

template <class Fn>
void parallel_blocks(std::size_t count, std::size_t block, unsigned threads, Fn&& fn) {
  if (count == 0) {
    return;
  }
  block = std::max<std::size_t>(block, 1);
  const std::size_t blocks = (count + block - 1) / block;
  threads = std::clamp<unsigned>(threads == 0 ? default_threads() : threads, 1,
                                 static_cast<unsigned>(std::min<std::size_t>(blocks, 1024)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks) {
        return;
      }
      try {
        fn(b, b * block, std::min(count, (b + 1) * block));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next.store(blocks);
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

/// Runs fn(i) for i in [0, count) and concatenates the per-block outputs in
/// index order. fn returns std::optional<T>.
template <class T, class Fn>
std::vector<T> parallel_collect(std::size_t count, unsigned threads, Fn&& fn, std::size_t block = 4096) {
  const std::size_t blocks = (count + block - 1) / std::max<std::size_t>(block, 1);
  std::vector<std::vector<T>> parts(blocks);
  parallel_blocks(count, block, threads, [&](std::size_t b, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (auto hit = fn(i)) {
        parts[b].push_back(std::move(*hit));
      }
    }
  });
  std::vector<T> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace cheb
