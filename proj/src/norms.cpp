#include "signseq/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace signseq {

namespace {

void require_finite_2d(const std::vector<Vec>& vertices) {
  if (vertices.empty()) throw InvalidPolygon("polygon: empty vertex list");
  for (const Vec& v : vertices) {
    if (v.dim() != 2) throw InvalidPolygon("polygon: vertex is not two-dimensional");
    if (!v.finite()) throw InvalidPolygon("polygon: non-finite vertex coordinate");
  }
}

bool nearly_equal(const Vec& a, const Vec& b, double tol) {
  return std::fabs(a[0] - b[0]) <= tol && std::fabs(a[1] - b[1]) <= tol;
}

// Andrew monotone chain, counterclockwise, strict turns: collinear points
// are dropped. eps scales with the squared coordinate magnitude.
std::vector<Vec> convex_hull_ccw(std::vector<Vec> pts, double eps) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec> hull(2 * n);
  std::size_t k = 0;
  auto turn = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

}  // namespace

PolygonGauge PolygonGauge::from_vertices(const std::vector<Vec>& input) {
  require_finite_2d(input);

  // Origin symmetry: every vertex must have its negation in the list.
  for (const Vec& v : input) {
    bool mirrored = false;
    for (const Vec& w : input) {
      if (nearly_equal(w, -v, 1e-12)) {
        mirrored = true;
        break;
      }
    }
    if (!mirrored) throw InvalidPolygon("polygon: vertex list is not origin-symmetric");
  }

  // Deduplicate before hulling.
  std::vector<Vec> pts;
  for (const Vec& v : input) {
    bool dup = false;
    for (const Vec& w : pts) {
      if (nearly_equal(w, v, 1e-12)) {
        dup = true;
        break;
      }
    }
    if (!dup) pts.push_back(v);
  }

  double scale = 0.0;
  for (const Vec& v : pts) scale = std::max(scale, max_abs(v));
  const double eps_cross = 1e-12 * std::max(1.0, scale * scale);

  std::vector<Vec> hull = convex_hull_ccw(pts, eps_cross);
  if (hull.size() < 3) throw InvalidPolygon("polygon: degenerate (origin not strictly inside)");

  // Counterclockwise around an interior origin means every adjacent pair has
  // positive cross product; this is also the origin-inside check.
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vec& p = hull[i];
    const Vec& q = hull[(i + 1) % hull.size()];
    if (cross(p, q) <= eps_cross) throw InvalidPolygon("polygon: origin not strictly inside");
  }

  // Canonical start: smallest angle in (-pi, pi].
  std::size_t start = 0;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (std::atan2(hull[i][1], hull[i][0]) < std::atan2(hull[start][1], hull[start][0])) start = i;
  }
  std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(start), hull.end());

  PolygonGauge g;
  g.vertices_ = hull;
  g.facets_.reserve(hull.size());
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vec& p = hull[i];
    const Vec& q = hull[(i + 1) % hull.size()];
    // Solve <a,p> = <a,q> = 1 for the facet functional a.
    const double det = cross(p, q);
    g.facets_.push_back(Vec{(q[1] - p[1]) / det, (p[0] - q[0]) / det});
  }

  // Every vertex must sit on the unit sphere of the gauge, supported by one
  // of its facets.
  for (const Vec& p : g.vertices_) {
    if (std::fabs(g.value(p) - 1.0) > 1e-9) {
      throw InvalidPolygon("polygon: inconsistent facets (vertex gauge != 1)");
    }
    bool supported = false;
    for (const Vec& a : g.facets_) {
      if (std::fabs(dot(a, p) - 1.0) <= 1e-9) {
        supported = true;
        break;
      }
    }
    if (!supported) throw InvalidPolygon("polygon: inconsistent facets (unsupported vertex)");
  }

  // A deduplicated input point strictly inside the hull is non-convex input.
  for (const Vec& v : pts) {
    if (g.value(v) < 1.0 - 1e-9) {
      throw InvalidPolygon("polygon: vertex strictly inside the hull (non-convex position)");
    }
  }

  return g;
}

double PolygonGauge::value(const Vec& v) const {
  if (v.dim() != 2) throw DimensionMismatch("polygon gauge: requires dimension 2");
  double m = 0.0;
  for (const Vec& a : facets_) m = std::max(m, a[0] * v[0] + a[1] * v[1]);
  return m;
}

PolygonGauge build_gauge(const std::vector<Vec>& vertices) {
  return PolygonGauge::from_vertices(vertices);
}

NormSpec NormSpec::polygon(const std::vector<Vec>& vertices) {
  NormSpec spec(NormKind::polygon);
  spec.gauge_ = std::make_shared<const PolygonGauge>(build_gauge(vertices));
  return spec;
}

std::string NormSpec::name() const {
  switch (kind_) {
    case NormKind::euclidean: return "euclidean";
    case NormKind::l1: return "l1";
    case NormKind::linf: return "linf";
    case NormKind::polygon: return "polygon";
  }
  return "unknown";
}

double norm(const Vec& v, const NormSpec& spec) {
  if (!v.finite()) throw std::invalid_argument("norm: non-finite coordinate");
  switch (spec.kind()) {
    case NormKind::euclidean:
      return std::sqrt(dot(v, v));
    case NormKind::l1: {
      double s = 0.0;
      for (std::size_t i = 0; i < v.dim(); ++i) s += std::fabs(v[i]);
      return s;
    }
    case NormKind::linf:
      return max_abs(v);
    case NormKind::polygon:
      return spec.gauge()->value(v);
  }
  throw std::logic_error("norm: unreachable");
}

Vec rotate(const Vec& v, double angle) {
  if (v.dim() != 2) throw DimensionMismatch("rotate: requires dimension 2");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return Vec{v[0] * c - v[1] * s, v[0] * s + v[1] * c};
}

Vec random_unit_ball_vector(const NormSpec& spec, std::mt19937_64& rng, std::size_t dim) {
  if (spec.kind() == NormKind::polygon && dim != 2) {
    throw DimensionMismatch("random_unit_ball_vector: polygon norms require dimension 2");
  }
  if (dim == 0) throw std::invalid_argument("random_unit_ball_vector: dimension must be >= 1");

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  Vec dir = Vec::zero(dim);
  double len = 0.0;
  do {
    for (std::size_t i = 0; i < dim; ++i) dir[i] = gauss(rng);
    len = std::sqrt(dot(dir, dir));
  } while (len < 1e-12);

  const double r = std::pow(unif(rng), 1.0 / static_cast<double>(dim));
  const double g = norm(dir, spec);
  return (r / g) * dir;
}

}  // namespace signseq
