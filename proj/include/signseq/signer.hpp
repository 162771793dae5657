#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signseq/admissible.hpp"
#include "signseq/norms.hpp"
#include "signseq/vec.hpp"

namespace signseq {

enum class Algorithm { trapping, greedy };

/// Signs plus the certificate data. partial_norms[k] is the norm of the
/// k-th signed partial sum, recomputed from scratch after sign extraction.
struct SignResult {
  std::vector<int> signs;  // one of -1/+1 per input
  std::vector<double> partial_norms;
  double max_partial_norm = 0.0;
  std::optional<double> certified_bound;  // absent for greedy and for d > 2
  Algorithm algorithm = Algorithm::trapping;
  std::vector<DegeneracyWarning> warnings;
  std::optional<double> final_radius;  // largest signed sum of the final atoms
};

/// One step of the induction: the consumed vector, which case fired, the
/// chosen coefficient pattern, and the atoms afterwards. Re-running insert on
/// a snapshot reproduces the next snapshot exactly.
struct StepRecord {
  Vec input;
  InsertCase case_taken = InsertCase::extend;
  SignPattern coefficients;
  std::vector<Atom> atoms;
};

struct StepTrace {
  std::vector<StepRecord> steps;
};

/// Consumes the vectors left to right through the admissible-set induction,
/// then extracts signs from the final atoms' provenance, picking the final
/// pattern that minimizes the norm of the total signed sum (ties: +1 before
/// -1, lexicographically).
///
/// For d = 2 the result carries a certified bound: sqrt(3)*(1+tol) for the
/// Euclidean norm, 2*(1+tol) otherwise, inflated by 2*excess per degeneracy
/// warning. For d > 2 the same machinery runs but no bound is certified.
///
/// The state never looks ahead, but signs are only available after the full
/// pass: online state, offline signs.
///
/// Throws InputTooLong if any vector's norm exceeds 1 + tol; CapExceeded if
/// the admissible set outgrows the enumeration caps (possible for d > 2).
SignResult sign_sequence(std::span<const Vec> vectors, const NormSpec& spec,
                         double tol = kDefaultTol, StepTrace* trace = nullptr);

/// Baseline: each sign greedily minimizes the next partial sum's norm
/// (ties: +1). No certified bound.
SignResult greedy_sign(std::span<const Vec> vectors, const NormSpec& spec);

struct Verification {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Recomputes every partial sum from scratch and checks the SignResult
/// invariants. Never throws on bad results; reports the violated items.
Verification verify_sign_result(std::span<const Vec> vectors, const SignResult& result,
                                const NormSpec& spec);

}  // namespace signseq
