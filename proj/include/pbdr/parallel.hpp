#pragma once

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace pbdr::par {

// Loops below this size are not worth a thread team.
inline constexpr std::ptrdiff_t kParallelMin = 2048;

// Fixed reduction chunk so partial sums combine in the same order for any
// thread count; this is what makes trajectories bit-identical regardless of
// OMP_NUM_THREADS.
inline constexpr std::ptrdiff_t kChunk = 1024;

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

//! Element-wise map over [begin, end). Each index writes only its own slots.
template <typename F>
inline void for_each_index(bool parallel, std::ptrdiff_t begin, std::ptrdiff_t end, F&& fn) {
  const std::ptrdiff_t n = end - begin;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (parallel && n >= kParallelMin)
#endif
  for (std::ptrdiff_t i = begin; i < end; ++i) fn(i);
}

//! Deterministic reduction: chunk partials computed (possibly) in parallel,
//! then combined serially in chunk order.
template <typename Acc, typename ChunkFn, typename CombineFn>
inline Acc reduce_chunks(bool parallel, std::ptrdiff_t begin, std::ptrdiff_t end,
                         Acc init, ChunkFn&& chunk_fn, CombineFn&& combine) {
  const std::ptrdiff_t n = end - begin;
  if (n <= 0) return init;
  const std::ptrdiff_t nchunks = (n + kChunk - 1) / kChunk;
  if (nchunks == 1) {
    Acc acc = init;
    chunk_fn(begin, end, acc);
    return acc;
  }
  std::vector<Acc> partials(static_cast<size_t>(nchunks), init);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (parallel && n >= kParallelMin)
#endif
  for (std::ptrdiff_t c = 0; c < nchunks; ++c) {
    const std::ptrdiff_t lo = begin + c * kChunk;
    const std::ptrdiff_t hi = std::min(end, lo + kChunk);
    chunk_fn(lo, hi, partials[static_cast<size_t>(c)]);
  }
  Acc acc = init;
  for (std::ptrdiff_t c = 0; c < nchunks; ++c) combine(acc, partials[static_cast<size_t>(c)]);
  return acc;
}

}  // namespace pbdr::par
