#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace kjdt {

// Worker-thread cap: the KJDT_THREADS environment variable when set,
// hardware concurrency otherwise. set_thread_cap overrides both (0 resets).
// Results of every public operation are independent of the cap.
int thread_cap();
void set_thread_cap(int cap);

// Runs body(0..n-1) on up to thread_cap() workers. Bodies must only write
// to their own output slots.
void parallel_for(int n, const std::function<void(int)>& body);

namespace detail {
void parallel_block(int begin, int end, const std::function<void(int)>& body);
}

// Block-synchronous first-hit search: evaluates probe over [0, n) in blocks;
// within a block all indices run (possibly in parallel), then the smallest
// hit wins. The returned index is independent of scheduling.
template <class T>
std::optional<std::pair<int, T>> parallel_first(
    int n, const std::function<std::optional<T>(int)>& probe) {
  const int block = [] {
    int c = thread_cap();
    return c > 1 ? 4 * c : 1;
  }();
  for (int begin = 0; begin < n; begin += block) {
    int end = std::min(n, begin + block);
    std::vector<std::optional<T>> hits(end - begin);
    detail::parallel_block(begin, end, [&](int i) { hits[i - begin] = probe(i); });
    for (int i = begin; i < end; ++i)
      if (hits[i - begin]) return std::make_pair(i, std::move(*hits[i - begin]));
  }
  return std::nullopt;
}

}  // namespace kjdt
