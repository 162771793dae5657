#pragma once

#include <cstddef>
#include <vector>

#include "signseq/oracle.hpp"
#include "signseq/vec.hpp"

namespace signseq {

struct AdversaryConfig {
  double delta = 0.1;  // must be > 0
};

/// A Euclidean-plane sequence forcing every sign pattern to reach norm
/// >= sqrt(3) - delta. trajectory[k] is x_{k+1} = -(v_1 + ... + v_{k+1}).
struct AdversarySequence {
  std::vector<Vec> vectors;
  double delta = 0.0;
  std::vector<Vec> trajectory;
};

/// Returns the unit vector v with ||x + v|| = target, obtained by rotating
/// x/||x|| counterclockwise by arccos((target^2 - ||x||^2 - 1) / (2||x||)).
/// Requires ||x|| >= 1 and a solvable triangle; throws std::invalid_argument
/// otherwise.
Vec choose_unit_vector(const Vec& x, double target);

/// Builds the lower-bound sequence for the given delta. For
/// sqrt(3) - delta <= sqrt(2) the two perpendicular unit vectors suffice;
/// otherwise the sequence grows the trajectory until its norm reaches
/// sqrt(2) and finishes with one perpendicular unit vector. The length obeys
/// n < 3 + (sqrt(2) - 1)/delta.
AdversarySequence build_lower_bound_sequence(const AdversaryConfig& config);

/// Re-checks the sequence invariants and runs the exhaustive oracle at
/// threshold sqrt(3) - delta - 1e-9 (Euclidean norm).
/// Throws CapExceeded when the sequence is longer than the oracle cap.
bool verify_adversary(const AdversarySequence& seq, std::size_t cap = kOracleCap);

}  // namespace signseq
