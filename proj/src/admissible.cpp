#include "signseq/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace signseq {

namespace {

void check_same_dimension(std::span<const Vec> vectors) {
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].dim() != vectors[0].dim()) {
      throw DimensionMismatch("vectors of mixed dimensions in one set");
    }
  }
}

// Walks every coefficient pattern in {-1,0,+1}^k in lexicographic order with
// -1 < 0 < +1, accumulating the signed sum incrementally. leaf(coeffs, sum,
// nonzero_count) returns false to stop the sweep early.
template <typename Leaf>
void ternary_patterns(std::span<const Vec> vecs, Leaf&& leaf) {
  const std::size_t k = vecs.size();
  const std::size_t d = k ? vecs[0].dim() : 0;
  std::vector<Vec> sums(k + 1, Vec::zero(d));
  std::vector<int> coeffs(k, 0);
  int nonzero = 0;
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      if (!leaf(std::span<const int>(coeffs), sums[k], nonzero)) stop = true;
      return;
    }
    for (int c : {-1, 0, +1}) {
      coeffs[depth] = c;
      sums[depth + 1] = sums[depth];
      if (c > 0) {
        sums[depth + 1] += vecs[depth];
        ++nonzero;
      } else if (c < 0) {
        sums[depth + 1] -= vecs[depth];
        ++nonzero;
      }
      self(self, depth + 1);
      if (c != 0) --nonzero;
      if (stop) return;
    }
  };
  rec(rec, 0);
}

void validate_provenance(const Atom& atom) {
  if (atom.provenance.empty()) throw std::invalid_argument("atom: empty provenance");
  for (std::size_t i = 0; i < atom.provenance.size(); ++i) {
    const ProvenanceEntry& e = atom.provenance[i];
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("atom: provenance sign not +-1");
    if (e.index == 0) throw std::invalid_argument("atom: provenance index must be >= 1");
    if (i > 0 && atom.provenance[i - 1].index >= e.index) {
      throw std::invalid_argument("atom: provenance indices not strictly increasing");
    }
  }
}

}  // namespace

AdmissibleSet::AdmissibleSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::vector<std::size_t> seen;
  for (const Atom& a : atoms_) {
    if (a.value.dim() != atoms_.front().value.dim()) {
      throw DimensionMismatch("admissible set: atoms of mixed dimensions");
    }
    validate_provenance(a);
    for (const ProvenanceEntry& e : a.provenance) seen.push_back(e.index);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("admissible set: provenances overlap");
  }
}

std::size_t AdmissibleSet::max_consumed_index() const noexcept {
  std::size_t m = 0;
  for (const Atom& a : atoms_) {
    for (const ProvenanceEntry& e : a.provenance) m = std::max(m, e.index);
  }
  return m;
}

std::vector<Vec> AdmissibleSet::values() const {
  std::vector<Vec> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back(a.value);
  return out;
}

bool is_admissible(std::span<const Vec> vectors, const NormSpec& spec, double tol,
                   std::size_t cap) {
  if (vectors.size() > cap) {
    throw CapExceeded("admissibility check over " + std::to_string(vectors.size()) +
                      " vectors exceeds cap " + std::to_string(cap));
  }
  if (vectors.size() <= 1) return true;  // the empty set is always admissible
  check_same_dimension(vectors);

  bool admissible = true;
  ternary_patterns(vectors, [&](std::span<const int>, const Vec& sum, int nonzero) {
    if (nonzero >= 2 && norm(sum, spec) <= 1.0 + tol) {
      admissible = false;
      return false;
    }
    return true;
  });
  return admissible;
}

std::vector<PiElement> pi_set(const AdmissibleSet& set, std::size_t cap) {
  const std::size_t k = set.size();
  if (k > cap) {
    throw CapExceeded("signed-sum enumeration over " + std::to_string(k) +
                      " atoms exceeds cap " + std::to_string(cap));
  }
  std::vector<PiElement> out;
  out.reserve(std::size_t{1} << k);

  std::vector<Vec> sums(k + 1, Vec::zero(set.dimension()));
  SignPattern pattern(k, +1);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      out.push_back(PiElement{sums[k], pattern});
      return;
    }
    for (int s : {+1, -1}) {
      pattern[depth] = s;
      sums[depth + 1] = sums[depth];
      if (s > 0) {
        sums[depth + 1] += set.atoms()[depth].value;
      } else {
        sums[depth + 1] -= set.atoms()[depth].value;
      }
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return out;
}

double radius(const AdmissibleSet& set, const NormSpec& spec, std::size_t cap) {
  const std::size_t k = set.size();
  if (k > cap) {
    throw CapExceeded("radius enumeration over " + std::to_string(k) + " atoms exceeds cap " +
                      std::to_string(cap));
  }
  if (k == 0) return 0.0;

  double r = 0.0;
  std::vector<Vec> sums(k + 1, Vec::zero(set.dimension()));
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      r = std::max(r, norm(sums[k], spec));
      return;
    }
    for (int s : {+1, -1}) {
      sums[depth + 1] = sums[depth];
      if (s > 0) {
        sums[depth + 1] += set.atoms()[depth].value;
      } else {
        sums[depth + 1] -= set.atoms()[depth].value;
      }
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return r;
}

InsertResult insert(const AdmissibleSet& set, const Vec& v, std::size_t index,
                    const NormSpec& spec, double tol, std::size_t cap) {
  if (!v.finite()) throw std::invalid_argument("insert: non-finite vector");
  if (!set.empty() && v.dim() != set.dimension()) {
    throw DimensionMismatch("insert: vector dimension " + std::to_string(v.dim()) +
                            " does not match set dimension " + std::to_string(set.dimension()));
  }
  const double nv = norm(v, spec);
  if (nv > 1.0 + tol) {
    throw InputTooLong("insert: vector norm " + std::to_string(nv) + " exceeds 1 + tol");
  }
  if (index == 0 || index <= set.max_consumed_index()) {
    throw std::invalid_argument("insert: index must exceed every consumed index");
  }

  const std::size_t k = set.size();
  if (k + 1 > cap) {
    throw CapExceeded("insert: admissible set of " + std::to_string(k) +
                      " atoms exceeds enumeration cap " + std::to_string(cap));
  }

  // Case 1: the extended value list is still admissible.
  std::vector<Vec> candidate = set.values();
  candidate.push_back(v);
  if (is_admissible(candidate, spec, tol, cap)) {
    std::vector<Atom> atoms = set.atoms();
    atoms.push_back(Atom{v, {ProvenanceEntry{index, +1}}});
    return InsertResult{AdmissibleSet(std::move(atoms)), InsertCase::extend, {}, std::nullopt};
  }

  // Case 2: sweep all patterns, keep the feasible one with the most non-zero
  // entries (first in lexicographic order on ties). Track the minimum-norm
  // non-trivial combination as the degeneracy fallback.
  std::vector<Vec> values = set.values();
  SignPattern best;
  int best_count = -1;
  SignPattern fallback;
  double fallback_norm = std::numeric_limits<double>::infinity();
  Vec scratch = Vec::zero(v.dim());

  ternary_patterns(values, [&](std::span<const int> coeffs, const Vec& atom_sum, int nonzero) {
    scratch = atom_sum;
    scratch += v;
    const double nm = norm(scratch, spec);
    if (nm <= 1.0 + tol && nonzero > best_count) {
      best_count = nonzero;
      best.assign(coeffs.begin(), coeffs.end());
    }
    if (nonzero >= 1 && nm < fallback_norm) {
      fallback_norm = nm;
      fallback.assign(coeffs.begin(), coeffs.end());
    }
    return true;
  });

  // ||v|| <= 1 + tol, so the all-zero pattern is always feasible.
  std::optional<DegeneracyWarning> warning;
  if (best_count == 0) {
    // Mathematically impossible when the set invariant holds: a failed Case 1
    // implies some violating combination involves v. If floats disagree,
    // collapse with the minimum-norm combination and certify the excess.
    if (fallback.empty()) throw std::logic_error("insert: collapse on an empty set");
    best = fallback;
    warning = DegeneracyWarning{index, fallback_norm - 1.0};
  }

  Vec merged = Vec::zero(v.dim());
  for (std::size_t i = 0; i < k; ++i) {
    if (best[i] > 0) {
      merged += values[i];
    } else if (best[i] < 0) {
      merged -= values[i];
    }
  }
  merged += v;

  std::vector<ProvenanceEntry> provenance{ProvenanceEntry{index, +1}};
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < k; ++i) {
    if (best[i] == 0) {
      atoms.push_back(set.atoms()[i]);
      continue;
    }
    for (const ProvenanceEntry& e : set.atoms()[i].provenance) {
      provenance.push_back(ProvenanceEntry{e.index, best[i] * e.sign});
    }
  }
  std::sort(provenance.begin(), provenance.end(),
            [](const ProvenanceEntry& a, const ProvenanceEntry& b) { return a.index < b.index; });
  atoms.push_back(Atom{merged, std::move(provenance)});

  return InsertResult{AdmissibleSet(std::move(atoms)), InsertCase::collapse, std::move(best),
                      warning};
}

}  // namespace signseq
