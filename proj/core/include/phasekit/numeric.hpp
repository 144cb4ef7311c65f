#pragma once

#include <cstddef>
#include <functional>

namespace phasekit {

/// Number of worker threads compute kernels may use (default 1).
/// Results are bitwise independent of this setting: parallel loops always
/// assign one output slot per index and keep per-slot summation order fixed.
int thread_count();
void set_thread_count(int n);

namespace detail {

/// Cascade (pairwise) summation of term(lo..hi-1); error grows like
/// log2(n)*eps instead of n*eps, which matters for the ~1e6-node angular sums.
template <typename T, typename F>
T pairwise_sum(std::size_t lo, std::size_t hi, F&& term) {
  const std::size_t n = hi - lo;
  if (n <= 16) {
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = lo + n / 2;
  return pairwise_sum<T>(lo, mid, term) + pairwise_sum<T>(mid, hi, term);
}

/// Runs body(i) for i in [0, n). Chunked statically over thread_count()
/// threads; body must only write state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace detail
}  // namespace phasekit
