#pragma once

#include <cstdint>
#include <optional>

namespace kls {

struct ComputeOptions {
  /// Worker threads for convolution, inversion and per-rank recursion steps.
  /// Results are identical for every value.
  unsigned threads = 1;
  /// Re-verify inputs and outputs (kernel axioms, round trips) inside the engine.
  bool strict = false;
  /// Test hook: shuffle the processing order of equal-rank intervals.
  std::optional<std::uint64_t> tie_shuffle_seed;
};

}  // namespace kls
