#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace atc {

/// Execution policy for the batch check kernels. `serial` is the reference
/// path; `parallel` runs the same loop body under OpenMP when compiled in
/// (and degrades to the serial loop otherwise). Results are written to
/// index-addressed slots, so both paths produce identical output.
enum class Exec { serial, parallel };

Exec default_exec();
int hardware_threads();

template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace atc
