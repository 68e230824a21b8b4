#ifndef ORIENT_PARALLEL_HPP
#define ORIENT_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace orient {

/// Runs f(i) for i in [0, count) on up to `threads` workers. Results must be
/// written to indexed slots by the caller; the schedule never affects them.
template <typename F>
void parallel_for(int count, int threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      f(i);
    }
  };
  int spawn = std::min(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(spawn);
  for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace orient

#endif
