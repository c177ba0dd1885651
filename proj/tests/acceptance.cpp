// Acceptance suite: runs the full verification battery twice and prints one
// pass/fail line per criterion. The exit status is nonzero as soon as any
// criterion fails.
#include <cstdio>

#include "atc/demo.hpp"

int main() {
  const std::uint64_t seed = 20250808;

  const atc::DemoResult first = atc::run_demo(seed);
  bool all_ok = true;
  for (const auto& [label, ok] : first.criteria) {
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", label.c_str());
    all_ok = all_ok && ok;
  }

  const atc::DemoResult second = atc::run_demo(seed);
  const bool deterministic = first.transcript == second.transcript;
  const bool in_budget = first.total_seconds < 900.0 && second.total_seconds < 900.0;
  const bool per_complex = first.max_chain_map_seconds < 60.0;
  const bool c10 = deterministic && in_budget && per_complex && first.all_ok() && second.all_ok();
  std::printf("%s criterion 10 demo end-to-end [deterministic=%s, %.1f s, max chain-map %.1f s]\n",
              c10 ? "PASS" : "FAIL", deterministic ? "yes" : "no", first.total_seconds,
              first.max_chain_map_seconds);
  all_ok = all_ok && c10;

  return all_ok ? 0 : 1;
}
