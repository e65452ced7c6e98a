#ifndef SDEP_PARALLEL_HPP
#define SDEP_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef SDEP_HAVE_OPENMP
#include <omp.h>
#endif

namespace sdep {

/// Reference loop: fn(i) for i = 0..count-1 in order.
template <class Fn>
void for_each_index_serial(std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

/// OpenMP loop with dynamic scheduling. Each fn(i) must write only its own
/// output slot; the first exception thrown by any iteration is rethrown after
/// the loop. Falls back to the serial loop when built without OpenMP.
template <class Fn>
void for_each_index_parallel(std::size_t count, int threads, Fn&& fn) {
#ifdef SDEP_HAVE_OPENMP
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
#else
  (void)threads;
  for_each_index_serial(count, fn);
#endif
}

template <class Fn>
void for_each_index(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for_each_index_serial(count, fn);
  } else {
    for_each_index_parallel(count, threads, fn);
  }
}

}  // namespace sdep

#endif  // SDEP_PARALLEL_HPP
