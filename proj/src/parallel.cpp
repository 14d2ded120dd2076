#include "tamarack/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tamarack {

namespace {

int g_threads = 0; // 0 = uninitialized

int initial_threads() {
  if (const char *env = std::getenv("TAMARACK_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace

int thread_count() {
  if (g_threads == 0) g_threads = initial_threads();
  return g_threads;
}

void set_thread_count(int n) { g_threads = n >= 1 ? n : 1; }

namespace detail {

void parallel_for_impl(int n, const std::function<void(int)> &f) {
  int nt = thread_count();
  if (nt <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr err;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (int i = 0; i < n; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      f(i);
    } catch (...) {
      if (!failed.exchange(true)) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
#else
  for (int i = 0; i < n; ++i) f(i);
#endif
}

} // namespace detail

} // namespace tamarack
