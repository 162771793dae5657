#include "signseq/highdim.hpp"

#include <stdexcept>

#include "signseq/admissible.hpp"

namespace signseq {

namespace {

HighDimFamily finish(HighDimFamily fam) {
  Vec sum = Vec::zero(fam.dimension);
  for (const Vec& v : fam.vectors) sum += v;
  fam.sum = sum;
  fam.sum_norm = norm(sum, family_norm(fam));
  return fam;
}

}  // namespace

HighDimFamily maxnorm_family(std::size_t d) {
  if (d < 2) throw std::invalid_argument("maxnorm_family: dimension must be >= 2");
  HighDimFamily fam;
  fam.dimension = d;
  fam.kind = FamilyKind::max_norm;
  for (std::size_t i = 0; i < d - 1; ++i) {
    Vec v(std::vector<double>(d, 1.0));
    v[i] = -1.0;
    fam.vectors.push_back(std::move(v));
  }
  return finish(std::move(fam));
}

HighDimFamily euclidean_family(std::size_t d) {
  if (d < 2) throw std::invalid_argument("euclidean_family: dimension must be >= 2");
  HighDimFamily fam;
  fam.dimension = d;
  fam.kind = FamilyKind::euclidean;
  for (std::size_t i = 0; i < d - 1; ++i) {
    Vec v = Vec::zero(d);
    v[0] = 0.2;
    v[i + 1] = 0.8;
    fam.vectors.push_back(std::move(v));
  }
  return finish(std::move(fam));
}

double family_radius_lower_bound(const HighDimFamily& fam) { return fam.sum_norm; }

std::optional<bool> verify_family(const HighDimFamily& fam, std::size_t cap) {
  if (fam.vectors.size() > cap) return std::nullopt;
  return is_admissible(fam.vectors, family_norm(fam), kDefaultTol, cap);
}

NormSpec family_norm(const HighDimFamily& fam) {
  return fam.kind == FamilyKind::max_norm ? NormSpec::linf() : NormSpec::euclidean();
}

}  // namespace signseq
