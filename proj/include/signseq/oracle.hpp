#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "signseq/norms.hpp"
#include "signseq/vec.hpp"

namespace signseq {

inline constexpr std::size_t kOracleCap = 24;

struct OracleResult {
  double value = 0.0;               // min over sign patterns of the max partial-sum norm
  std::vector<int> witness_signs;   // a pattern attaining it (first sign fixed to +1)
  std::uint64_t nodes_explored = 0;
};

/// Exact minimax over all sign patterns: depth-first search with the first
/// sign fixed to +1 (a global flip preserves every norm) and branch-and-bound
/// pruning once the running maximum reaches the incumbent.
/// Throws CapExceeded for n > cap.
OracleResult brute_force_minmax(std::span<const Vec> vectors, const NormSpec& spec,
                                std::size_t cap = kOracleCap);

/// True iff every sign pattern has some partial sum with norm >= threshold.
/// Searches for an escaping pattern (all partial sums strictly below the
/// threshold) with early exit. The empty sequence has no partial sums, so it
/// never exceeds anything. Throws CapExceeded for n > cap.
bool all_patterns_exceed(std::span<const Vec> vectors, const NormSpec& spec, double threshold,
                         std::size_t cap = kOracleCap);

}  // namespace signseq
