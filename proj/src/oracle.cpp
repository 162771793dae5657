#include "signseq/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace signseq {

namespace {

std::size_t validate(std::span<const Vec> vectors, std::size_t cap, const char* what) {
  if (vectors.size() > cap) {
    throw CapExceeded(std::string(what) + ": sequence length " + std::to_string(vectors.size()) +
                      " exceeds cap " + std::to_string(cap));
  }
  const std::size_t d = vectors.empty() ? 0 : vectors.front().dim();
  for (const Vec& v : vectors) {
    if (!v.finite()) throw std::invalid_argument(std::string(what) + ": non-finite vector");
    if (v.dim() != d) throw DimensionMismatch(std::string(what) + ": mixed dimensions");
  }
  return d;
}

}  // namespace

OracleResult brute_force_minmax(std::span<const Vec> vectors, const NormSpec& spec,
                                std::size_t cap) {
  const std::size_t d = validate(vectors, cap, "brute_force_minmax");
  const std::size_t n = vectors.size();
  OracleResult result;
  if (n == 0) return result;

  std::vector<Vec> sums(n + 1, Vec::zero(d));
  std::vector<double> maxes(n + 1, 0.0);
  std::vector<int> current(n, +1);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> witness;
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    for (int s : {+1, -1}) {
      if (depth == 0 && s < 0) break;  // global sign symmetry: fix the first sign
      current[depth] = s;
      sums[depth + 1] = sums[depth];
      if (s > 0) {
        sums[depth + 1] += vectors[depth];
      } else {
        sums[depth + 1] -= vectors[depth];
      }
      ++nodes;
      const double running = std::max(maxes[depth], norm(sums[depth + 1], spec));
      if (running >= best) continue;  // cannot strictly improve below this node
      maxes[depth + 1] = running;
      if (depth + 1 == n) {
        best = running;
        witness = current;
      } else {
        self(self, depth + 1);
      }
    }
  };
  rec(rec, 0);

  result.value = best;
  result.witness_signs = std::move(witness);
  result.nodes_explored = nodes;
  return result;
}

bool all_patterns_exceed(std::span<const Vec> vectors, const NormSpec& spec, double threshold,
                         std::size_t cap) {
  const std::size_t d = validate(vectors, cap, "all_patterns_exceed");
  const std::size_t n = vectors.size();
  if (n == 0) return false;

  std::vector<Vec> sums(n + 1, Vec::zero(d));
  bool escaped = false;

  // Look for a pattern whose every partial sum stays strictly below the
  // threshold; the first sign is fixed by symmetry.
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    for (int s : {+1, -1}) {
      if (escaped) return;
      if (depth == 0 && s < 0) break;
      sums[depth + 1] = sums[depth];
      if (s > 0) {
        sums[depth + 1] += vectors[depth];
      } else {
        sums[depth + 1] -= vectors[depth];
      }
      if (norm(sums[depth + 1], spec) >= threshold) continue;
      if (depth + 1 == n) {
        escaped = true;
        return;
      }
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return !escaped;
}

}  // namespace signseq
