#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace centra {

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, if any

  bool passed() const { return failures == 0; }
};

/// Runs the whole property suite (all module invariants) on `count` seeded
/// random instances per check, rotating through F_2, F_5, F_13 and Q.
/// Deterministic for a fixed (seed, count).
std::vector<CheckResult> verify_all(std::uint64_t seed, std::size_t count);

}  // namespace centra
