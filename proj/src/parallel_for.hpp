#pragma once

#include "biharm/kernels.hpp"

#include <cstddef>
#include <exception>
#include <mutex>

namespace biharm::detail {

// Runs body(i) for i in [0, n). Exceptions may not escape an OpenMP region,
// so the first one is captured and rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace biharm::detail
