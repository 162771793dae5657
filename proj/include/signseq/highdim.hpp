#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "signseq/norms.hpp"
#include "signseq/vec.hpp"

namespace signseq {

/// Verification ceiling for the 3^(d-1) admissibility sweep.
inline constexpr std::size_t kFamilyVerifyCap = 14;

enum class FamilyKind { max_norm, euclidean };

/// An explicit admissible family of d-1 vectors in R^d whose full sum has
/// norm growing linearly in d.
struct HighDimFamily {
  std::size_t dimension = 0;
  FamilyKind kind = FamilyKind::max_norm;
  std::vector<Vec> vectors;
  Vec sum;
  double sum_norm = 0.0;
};

/// Max-norm family: vector i has -1 in coordinate i and +1 elsewhere.
/// The sum has max norm exactly d - 1. Requires d >= 2.
HighDimFamily maxnorm_family(std::size_t d);

/// Euclidean family: vector i has 0.2 in the first coordinate, 0.8 in
/// coordinate i+1, zero elsewhere; each has norm sqrt(0.68). The sum's norm
/// is sqrt(0.04 (d-1)^2 + 0.64 (d-1)) > 0.2 (d-1). Requires d >= 2.
HighDimFamily euclidean_family(std::size_t d);

/// The norm of the family's full sum: a lower bound on the radius of its
/// signed-sum set, since the all-plus pattern is one of the signed sums.
double family_radius_lower_bound(const HighDimFamily& fam);

/// Brute-force admissibility over 3^(d-1) patterns; nullopt when d - 1
/// exceeds the cap (family generated but unverified).
std::optional<bool> verify_family(const HighDimFamily& fam, std::size_t cap = kFamilyVerifyCap);

/// The norm the family lives in.
NormSpec family_norm(const HighDimFamily& fam);

}  // namespace signseq
