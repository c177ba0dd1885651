#include "atc/parallel.hpp"

namespace atc {

Exec default_exec() {
#ifdef _OPENMP
  return Exec::parallel;
#else
  return Exec::serial;
#endif
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace atc
