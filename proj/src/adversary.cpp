#include "signseq/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "signseq/norms.hpp"

namespace signseq {

namespace {

double euclid(const Vec& v) { return std::sqrt(dot(v, v)); }

}  // namespace

Vec choose_unit_vector(const Vec& x, double target) {
  if (x.dim() != 2) throw DimensionMismatch("choose_unit_vector: requires dimension 2");
  if (!x.finite() || !std::isfinite(target)) {
    throw std::invalid_argument("choose_unit_vector: non-finite input");
  }
  const double nx = euclid(x);
  if (nx < 1.0 - 1e-12) {
    throw std::invalid_argument("choose_unit_vector: ||x|| = " + std::to_string(nx) +
                                " must be >= 1");
  }
  // Law of cosines: ||x + v||^2 = ||x||^2 + 1 + 2||x|| cos(theta) for a unit
  // v at angle theta from x.
  const double c = (target * target - nx * nx - 1.0) / (2.0 * nx);
  if (std::fabs(c) > 1.0 + 1e-12) {
    throw std::invalid_argument("choose_unit_vector: no unit vector reaches target " +
                                std::to_string(target) + " from ||x|| = " + std::to_string(nx));
  }
  const double theta = std::acos(std::clamp(c, -1.0, 1.0));
  return rotate((1.0 / nx) * x, theta);
}

AdversarySequence build_lower_bound_sequence(const AdversaryConfig& config) {
  const double delta = config.delta;
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("adversary: delta must be a positive real");
  }

  const double sqrt2 = std::numbers::sqrt2;
  const double sqrt3 = std::numbers::sqrt3;
  const double target = sqrt3 - delta;

  AdversarySequence seq;
  seq.delta = delta;

  if (target <= sqrt2) {
    seq.vectors = {Vec{1.0, 0.0}, Vec{0.0, 1.0}};
    seq.trajectory = {Vec{-1.0, 0.0}, Vec{-1.0, -1.0}};
    return seq;
  }

  const double length_bound = 3.0 + (sqrt2 - 1.0) / delta;

  seq.vectors.push_back(Vec{0.0, 1.0});
  Vec x{0.0, -1.0};
  seq.trajectory.push_back(x);

  while (euclid(x) < sqrt2) {
    const double prev = euclid(x);
    const Vec v = choose_unit_vector(x, target);
    seq.vectors.push_back(v);
    x -= v;
    seq.trajectory.push_back(x);
    if (euclid(x) <= prev + delta - 1e-9) {
      throw std::logic_error("adversary: trajectory growth below delta");
    }
    if (static_cast<double>(seq.vectors.size()) + 1.0 >= length_bound) {
      throw std::logic_error("adversary: length bound violated during growth");
    }
  }

  // One final unit vector perpendicular to the trajectory (counterclockwise
  // normal); the closing partial sums then reach sqrt(3) regardless of signs.
  const Vec xhat = (1.0 / euclid(x)) * x;
  const Vec last{-xhat[1], xhat[0]};
  seq.vectors.push_back(last);
  x -= last;
  seq.trajectory.push_back(x);

  if (static_cast<double>(seq.vectors.size()) >= length_bound) {
    throw std::logic_error("adversary: length bound violated");
  }
  return seq;
}

bool verify_adversary(const AdversarySequence& seq, std::size_t cap) {
  const double delta = seq.delta;
  if (!(delta > 0.0)) return false;
  const std::size_t n = seq.vectors.size();
  if (n == 0 || seq.trajectory.size() != n) return false;

  for (const Vec& v : seq.vectors) {
    if (v.dim() != 2 || !v.finite()) return false;
    if (euclid(v) > 1.0 + 1e-12) return false;
  }
  if (std::fabs(euclid(seq.vectors.front()) - 1.0) > 1e-12) return false;
  if (std::fabs(euclid(seq.vectors.back()) - 1.0) > 1e-12) return false;

  const double sqrt2 = std::numbers::sqrt2;
  const double sqrt3 = std::numbers::sqrt3;
  if (static_cast<double>(n) >= 3.0 + (sqrt2 - 1.0) / delta) return false;

  // trajectory[k] must equal -(v_1 + ... + v_{k+1}).
  Vec running = Vec::zero(2);
  for (std::size_t k = 0; k < n; ++k) {
    running -= seq.vectors[k];
    if (max_abs(running - seq.trajectory[k]) > 1e-12) return false;
  }

  // Growth phase (everything but the final perpendicular step).
  if (n > 2) {
    for (std::size_t k = 0; k + 2 < n; ++k) {
      const Vec& xk = seq.trajectory[k];
      const Vec& v_next = seq.vectors[k + 1];
      if (euclid(seq.trajectory[k + 1]) <= euclid(xk) + delta - 1e-9) return false;
      if (euclid(xk + v_next) < sqrt3 - delta - 1e-9) return false;
    }
  }

  return all_patterns_exceed(seq.vectors, NormSpec::euclidean(), sqrt3 - delta - 1e-9, cap);
}

}  // namespace signseq
