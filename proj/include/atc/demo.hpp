#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atc/parallel.hpp"

namespace atc {

/// Outcome of the end-to-end driver. The transcript is deterministic for a
/// fixed seed (no wall-clock content); timings are reported separately.
struct DemoResult {
  std::vector<std::pair<std::string, bool>> criteria;
  std::string transcript;
  double total_seconds = 0;
  double max_chain_map_seconds = 0;

  bool all_ok() const {
    for (const auto& [label, ok] : criteria)
      if (!ok) return false;
    return true;
  }
};

/// Runs the whole verification battery: chain maps on the bundled and seeded
/// corpora, negative controls, the Chern identities, the determinant lemmas,
/// classical compatibility, and the infrastructure oracles.
DemoResult run_demo(std::uint64_t seed, Exec exec = default_exec());

}  // namespace atc
