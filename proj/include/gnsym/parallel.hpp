#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace gnsym::par {

// Reductions split the index range into fixed blocks and combine the block partials serially
// in block order, so a result does not depend on the number of threads.
inline constexpr std::size_t kBlock = 4096;

void set_threads(int n);  // n <= 0 keeps the OpenMP default
int max_threads();

template <class F>
double blocked_sum(std::size_t n, F&& f) {
  const std::size_t nb = (n + kBlock - 1) / kBlock;
  std::vector<double> part(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock, hi = std::min(n, lo + kBlock);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += f(i);
    part[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (double p : part) total += p;
  return total;
}

template <class F>
double blocked_max(std::size_t n, F&& f) {
  const std::size_t nb = (n + kBlock - 1) / kBlock;
  std::vector<double> part(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock, hi = std::min(n, lo + kBlock);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc = std::max(acc, f(i));
    part[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (double p : part) total = std::max(total, p);
  return total;
}

// Elementwise map; each index is written by exactly one thread.
template <class F>
void for_each_index(std::size_t n, F&& f) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) f(static_cast<std::size_t>(i));
}

}  // namespace gnsym::par
