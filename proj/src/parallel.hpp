#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace fanqec::detail {

// Runs fn(i) for every i in [begin, end) on up to `threads` workers (0 = one
// per hardware thread). Indices are handed out in descending order so the
// costly high indices start first. fn must not throw.
template <typename Fn>
void parallel_for(int begin, int end, Fn&& fn, unsigned threads = 0) {
  if (end <= begin) return;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(end - begin));
  std::atomic<int> next{end - 1};
  auto worker = [&] {
    for (int i = next--; i >= begin; i = next--) fn(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

}  // namespace fanqec::detail
