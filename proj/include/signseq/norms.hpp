#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "signseq/vec.hpp"

namespace signseq {

/// Default tolerance for all comparisons against the unit ball. Threaded
/// explicitly through every module; never hidden in a global.
inline constexpr double kDefaultTol = 1e-9;

enum class NormKind { euclidean, l1, linf, polygon };

/// Gauge (Minkowski functional) of an origin-symmetric convex polygon.
///
/// The unit ball is { x : <a_f, x> <= 1 for every facet functional a_f },
/// so the gauge of v is max_f <a_f, v>. Vertices are canonicalized at
/// construction: sorted counterclockwise starting from the smallest angle,
/// collinear points dropped; all later code assumes canonical form.
class PolygonGauge {
 public:
  /// Validates and canonicalizes the vertex list, then derives one facet
  /// functional per adjacent vertex pair. Throws InvalidPolygon with a
  /// message naming the violated invariant.
  static PolygonGauge from_vertices(const std::vector<Vec>& vertices);

  double value(const Vec& v) const;

  const std::vector<Vec>& vertices() const noexcept { return vertices_; }
  const std::vector<Vec>& facets() const noexcept { return facets_; }

 private:
  PolygonGauge() = default;
  std::vector<Vec> vertices_;  // canonical ccw order
  std::vector<Vec> facets_;    // facets_[i] pairs vertices_[i], vertices_[i+1]
};

/// Builds the gauge for a symmetric polygon vertex list.
PolygonGauge build_gauge(const std::vector<Vec>& vertices);

/// Descriptor of a norm: one of the stock norms or a polygon gauge (2D only).
/// Cheap to copy; gauges are shared immutably.
class NormSpec {
 public:
  static NormSpec euclidean() { return NormSpec(NormKind::euclidean); }
  static NormSpec l1() { return NormSpec(NormKind::l1); }
  static NormSpec linf() { return NormSpec(NormKind::linf); }
  static NormSpec polygon(const std::vector<Vec>& vertices);

  NormKind kind() const noexcept { return kind_; }
  const PolygonGauge* gauge() const noexcept { return gauge_.get(); }
  std::string name() const;

 private:
  explicit NormSpec(NormKind kind) : kind_(kind) {}
  NormKind kind_;
  std::shared_ptr<const PolygonGauge> gauge_;
};

/// Evaluates ||v|| under the given norm. Throws DimensionMismatch when a
/// polygon gauge meets a non-2D vector, std::invalid_argument on non-finite
/// coordinates.
double norm(const Vec& v, const NormSpec& spec);

/// Counterclockwise rotation of a 2D vector. Preserves the Euclidean norm.
Vec rotate(const Vec& v, double angle);

/// Draws a vector with norm(v, spec) <= 1, deterministic given the generator
/// state. Uniform in the Euclidean ball; for other norms the direction is
/// uniform on the Euclidean sphere and rescaled onto the requested ball.
Vec random_unit_ball_vector(const NormSpec& spec, std::mt19937_64& rng, std::size_t dim = 2);

}  // namespace signseq
