// Times the verification kernels under the serial reference path and the
// OpenMP path on the same seeded complexes. Usage: verify_bench [seed].
#include <chrono>
#include <iostream>

#include "atc/atiyah.hpp"
#include "atc/builtin_schemes.hpp"
#include "atc/random_complexes.hpp"

using namespace atc;
using Clock = std::chrono::steady_clock;

namespace {

double time_once(const BundleComplex& E, Exec exec) {
  const auto t0 = Clock::now();
  const auto v = validate_complex(E, exec);
  const auto rep = build_truncated_atiyah(E);
  const auto r = verify_truncated_atiyah(E, rep, exec);
  const auto dt = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!v.ok() || !r.ok()) {
    std::cerr << "benchmark complex failed verification\n";
    std::exit(1);
  }
  return dt;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20250808;
  std::cout << "threads available: " << hardware_threads() << "\n";

  auto X = nodal_cubic_scheme();
  Rng rng(seed);
  std::cout << "complex        serial[s]  parallel[s]  speedup\n";
  for (int k = 0; k < 3; ++k) {
    const BundleComplex E = random_valid_complex(X, rng);
    // Warm the shared saturation cache outside the timed region.
    X->warm_cache();
    const double ts = time_once(E, Exec::serial);
    const double tp = time_once(E, Exec::parallel);
    std::printf("nodal/rand%d    %9.3f  %11.3f  %7.2fx\n", k, ts, tp, ts / tp);
  }
  return 0;
}
