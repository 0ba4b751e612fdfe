#include "kjdt/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace kjdt {

namespace {

std::atomic<int> g_override{0};

int env_cap() {
  if (const char* env = std::getenv("KJDT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

}  // namespace

int thread_cap() {
  int o = g_override.load();
  return o >= 1 ? o : env_cap();
}

void set_thread_cap(int cap) { g_override.store(cap); }

namespace detail {

void parallel_block(int begin, int end, const std::function<void(int)>& body) {
  const int n = end - begin;
  const int workers = std::min(thread_cap(), n);
  if (workers <= 1 || n <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<int> next{begin};
  auto run = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= end) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace detail

void parallel_for(int n, const std::function<void(int)>& body) {
  detail::parallel_block(0, n, body);
}

}  // namespace kjdt
