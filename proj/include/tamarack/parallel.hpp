#ifndef TAMARACK_PARALLEL_HPP
#define TAMARACK_PARALLEL_HPP

#include <exception>
#include <functional>

namespace tamarack {

// Worker count for the matrix kernels. 1 = serial reference path.
// Initialized from TAMARACK_THREADS when set, else the OpenMP default.
int thread_count();
void set_thread_count(int n);

namespace detail {
void parallel_for_impl(int n, const std::function<void(int)> &f);
}

// Independent jobs i = 0..n-1; results must be written to per-index slots.
// Deterministic regardless of scheduling.
template <typename F> void parallel_for(int n, F &&f) {
  detail::parallel_for_impl(n, std::function<void(int)>(std::forward<F>(f)));
}

} // namespace tamarack

#endif
