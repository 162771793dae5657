#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "signseq/norms.hpp"
#include "signseq/vec.hpp"

namespace signseq {

/// Enumeration caps guarding the 3^k / 2^k blow-ups.
inline constexpr std::size_t kAdmissibilityCap = 16;
inline constexpr std::size_t kPiCap = 20;

/// Coefficient pattern over a set of atoms. Entries are -1/0/+1 for
/// admissibility sweeps, -1/+1 for signed-sum elements.
using SignPattern = std::vector<int>;

/// One original input index together with the sign it carries inside an
/// aggregated atom.
struct ProvenanceEntry {
  std::size_t index = 0;  // 1-based position in the original sequence
  int sign = +1;
  friend bool operator==(const ProvenanceEntry&, const ProvenanceEntry&) = default;
};

/// A unit-ball vector plus the signed multiset of original inputs it
/// aggregates. value == sum of sign * (input at index) over the provenance.
struct Atom {
  Vec value;
  std::vector<ProvenanceEntry> provenance;  // strictly increasing indices
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Ordered collection of atoms forming an admissible set. Immutable in use:
/// insert returns a new set. Provenances across atoms are pairwise disjoint
/// and cover exactly the consumed input indices.
class AdmissibleSet {
 public:
  AdmissibleSet() = default;

  /// Structural validation only (provenance shape, dimensions); does not
  /// check admissibility. Throws std::invalid_argument on malformed input.
  explicit AdmissibleSet(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t dimension() const noexcept { return atoms_.empty() ? 0 : atoms_.front().value.dim(); }

  /// Largest original index consumed so far; 0 when empty.
  std::size_t max_consumed_index() const noexcept;

  std::vector<Vec> values() const;

  friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// True iff every coefficient pattern in {-1,0,+1}^k with at least two
/// non-zero entries has norm > 1 + tol. Vacuously true for k <= 1; the empty
/// set is always admissible. Callers guarantee each vector has norm <= 1+tol.
/// Throws CapExceeded for k > cap (3^k sweep).
bool is_admissible(std::span<const Vec> vectors, const NormSpec& spec, double tol = kDefaultTol,
                   std::size_t cap = kAdmissibilityCap);

struct PiElement {
  Vec point;
  SignPattern pattern;  // entries in {-1,+1}, one per atom
};

/// All 2^k signed sums of the atom values with their patterns. The empty set
/// yields the single zero point (of the set's dimension) with an empty
/// pattern. Throws CapExceeded for k > cap.
std::vector<PiElement> pi_set(const AdmissibleSet& set, std::size_t cap = kPiCap);

/// Largest norm over the signed sums of the set; 0 for the empty set.
double radius(const AdmissibleSet& set, const NormSpec& spec, std::size_t cap = kPiCap);

enum class InsertCase { extend = 1, collapse = 2 };

/// Emitted when a collapse had to use a combination whose norm exceeds
/// 1 + tol (floating-point disagreement between the admissibility verdict
/// and the feasibility sweep). excess = norm - 1 of the chosen combination.
struct DegeneracyWarning {
  std::size_t index = 0;  // input index being inserted when it happened
  double excess = 0.0;
  friend bool operator==(const DegeneracyWarning&, const DegeneracyWarning&) = default;
};

struct InsertResult {
  AdmissibleSet set;
  InsertCase case_taken = InsertCase::extend;
  SignPattern coefficients;  // over the previous atoms; empty for extend
  std::optional<DegeneracyWarning> warning;
};

/// Inserts one unit-ball vector, preserving admissibility.
///
/// Either the set extends by a fresh atom (the extended value list is still
/// admissible), or the vector collapses with some atoms: among all
/// coefficient patterns e in {-1,0,+1}^k with ||v + sum e_i a_i|| <= 1 + tol,
/// the one with the most non-zero entries wins, ties broken by lexicographic
/// order with -1 < 0 < +1. Absorbed atoms fold into the new atom (their
/// provenance signs multiplied by e_i); untouched atoms keep their relative
/// order and the collapsed atom is appended after them.
///
/// Throws InputTooLong when ||v|| > 1 + tol, std::invalid_argument when the
/// index does not exceed every consumed index, CapExceeded when the sweep
/// would exceed cap.
InsertResult insert(const AdmissibleSet& set, const Vec& v, std::size_t index,
                    const NormSpec& spec, double tol = kDefaultTol,
                    std::size_t cap = kAdmissibilityCap);

}  // namespace signseq
