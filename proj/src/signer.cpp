#include "signseq/signer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace signseq {

namespace {

std::size_t common_dimension(std::span<const Vec> vectors, const NormSpec& spec) {
  // Empty input defaults to the plane, the certified domain.
  const std::size_t d = vectors.empty() ? 2 : vectors.front().dim();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!vectors[i].finite()) {
      throw std::invalid_argument("vector " + std::to_string(i + 1) + " has non-finite coordinates");
    }
    if (vectors[i].dim() != d) {
      throw DimensionMismatch("vector " + std::to_string(i + 1) + " has dimension " +
                              std::to_string(vectors[i].dim()) + ", expected " + std::to_string(d));
    }
  }
  if (spec.kind() == NormKind::polygon && d != 2) {
    throw DimensionMismatch("polygon norms require dimension 2");
  }
  return d;
}

std::vector<double> recompute_partial_norms(std::span<const Vec> vectors,
                                            std::span<const int> signs, const NormSpec& spec,
                                            std::size_t d) {
  std::vector<double> norms(vectors.size());
  Vec sum = Vec::zero(d);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (signs[i] > 0) {
      sum += vectors[i];
    } else {
      sum -= vectors[i];
    }
    norms[i] = norm(sum, spec);
  }
  return norms;
}

}  // namespace

SignResult sign_sequence(std::span<const Vec> vectors, const NormSpec& spec, double tol,
                         StepTrace* trace) {
  const std::size_t n = vectors.size();
  const std::size_t d = common_dimension(vectors, spec);
  for (std::size_t i = 0; i < n; ++i) {
    const double nv = norm(vectors[i], spec);
    if (nv > 1.0 + tol) {
      throw InputTooLong("vector " + std::to_string(i + 1) + " has norm " + std::to_string(nv) +
                         " > 1 + tol");
    }
  }

  if (trace) trace->steps.clear();
  AdmissibleSet set;
  std::vector<DegeneracyWarning> warnings;
  for (std::size_t i = 0; i < n; ++i) {
    InsertResult step = insert(set, vectors[i], i + 1, spec, tol);
    if (step.warning) warnings.push_back(*step.warning);
    if (trace) {
      trace->steps.push_back(
          StepRecord{vectors[i], step.case_taken, step.coefficients, step.set.atoms()});
    }
    set = std::move(step.set);
  }

  // Final pattern over the atoms: minimize the norm of the total signed sum.
  const std::size_t k = set.size();
  if (k > kPiCap) {
    throw CapExceeded("final sign extraction over " + std::to_string(k) + " atoms exceeds cap " +
                      std::to_string(kPiCap));
  }
  SignPattern chosen(k, +1);
  {
    SignPattern current(k, +1);
    double best = std::numeric_limits<double>::infinity();
    std::vector<Vec> sums(k + 1, Vec::zero(d));
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (depth == k) {
        const double nm = norm(sums[k], spec);
        if (nm < best) {
          best = nm;
          chosen = current;
        }
        return;
      }
      for (int s : {+1, -1}) {  // +1 first: lexicographic tie-break
        current[depth] = s;
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
  }

  std::vector<int> signs(n, +1);
  for (std::size_t j = 0; j < k; ++j) {
    for (const ProvenanceEntry& e : set.atoms()[j].provenance) {
      signs[e.index - 1] = chosen[j] * e.sign;
    }
  }

  SignResult result;
  result.algorithm = Algorithm::trapping;
  result.signs = std::move(signs);
  result.partial_norms = recompute_partial_norms(vectors, result.signs, spec, d);
  result.max_partial_norm =
      result.partial_norms.empty()
          ? 0.0
          : *std::max_element(result.partial_norms.begin(), result.partial_norms.end());
  result.warnings = std::move(warnings);
  if (d == 2) {
    const double base = spec.kind() == NormKind::euclidean ? std::sqrt(3.0) : 2.0;
    double bound = base * (1.0 + tol);
    for (const DegeneracyWarning& w : result.warnings) bound += 2.0 * w.excess;
    result.certified_bound = bound;
  }
  result.final_radius = radius(set, spec);
  return result;
}

SignResult greedy_sign(std::span<const Vec> vectors, const NormSpec& spec) {
  const std::size_t d = common_dimension(vectors, spec);

  SignResult result;
  result.algorithm = Algorithm::greedy;
  result.signs.reserve(vectors.size());
  result.partial_norms.reserve(vectors.size());

  Vec sum = Vec::zero(d);
  for (const Vec& v : vectors) {
    const double plus = norm(sum + v, spec);
    const double minus = norm(sum - v, spec);
    const int s = plus <= minus ? +1 : -1;
    if (s > 0) {
      sum += v;
    } else {
      sum -= v;
    }
    result.signs.push_back(s);
    result.partial_norms.push_back(s > 0 ? plus : minus);
  }
  result.max_partial_norm =
      result.partial_norms.empty()
          ? 0.0
          : *std::max_element(result.partial_norms.begin(), result.partial_norms.end());
  return result;
}

Verification verify_sign_result(std::span<const Vec> vectors, const SignResult& result,
                                const NormSpec& spec) {
  Verification out;
  auto fail = [&out](std::string message) {
    out.ok = false;
    out.violations.push_back(std::move(message));
  };

  const std::size_t n = vectors.size();
  if (result.signs.size() != n) {
    fail("sign count " + std::to_string(result.signs.size()) + " does not match input count " +
         std::to_string(n));
    return out;
  }
  if (result.partial_norms.size() != n) {
    fail("partial_norms count does not match input count");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (result.signs[i] != 1 && result.signs[i] != -1) {
      fail("sign " + std::to_string(i + 1) + " is not +-1");
      return out;
    }
  }

  const std::size_t d = vectors.empty() ? 2 : vectors.front().dim();
  const std::vector<double> fresh = recompute_partial_norms(vectors, result.signs, spec, d);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(fresh[i] - result.partial_norms[i]) > 1e-9) {
      fail("partial norm " + std::to_string(i + 1) + " is " +
           std::to_string(result.partial_norms[i]) + ", recomputed " + std::to_string(fresh[i]));
    }
  }

  const double max_stored =
      result.partial_norms.empty()
          ? 0.0
          : *std::max_element(result.partial_norms.begin(), result.partial_norms.end());
  if (std::fabs(max_stored - result.max_partial_norm) > 1e-12) {
    fail("max_partial_norm does not equal the maximum of partial_norms");
  }
  if (result.certified_bound &&
      result.max_partial_norm > *result.certified_bound + 1e-9) {
    fail("max_partial_norm exceeds the certified bound");
  }
  return out;
}

}  // namespace signseq
