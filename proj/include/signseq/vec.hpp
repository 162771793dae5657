#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "signseq/errors.hpp"

namespace signseq {

/// A vector in R^d. The dimension is fixed by construction; arithmetic
/// between mismatched dimensions throws DimensionMismatch.
class Vec {
 public:
  Vec() = default;
  Vec(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Vec(std::vector<double> coords) : coords_(std::move(coords)) {}

  static Vec zero(std::size_t dim) { return Vec(std::vector<double>(dim, 0.0)); }

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  bool finite() const noexcept {
    for (double c : coords_) {
      if (!std::isfinite(c)) return false;
    }
    return true;
  }

  Vec& operator+=(const Vec& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (double& c : coords_) c *= s;
    return *this;
  }

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  void check_dim(const Vec& o) const {
    if (coords_.size() != o.coords_.size()) {
      throw DimensionMismatch("vector dimensions differ: " + std::to_string(coords_.size()) +
                              " vs " + std::to_string(o.coords_.size()));
    }
  }

  std::vector<double> coords_;
};

inline Vec operator+(Vec a, const Vec& b) {
  a += b;
  return a;
}
inline Vec operator-(Vec a, const Vec& b) {
  a -= b;
  return a;
}
inline Vec operator-(const Vec& a) {
  Vec r = a;
  r *= -1.0;
  return r;
}
inline Vec operator*(double s, Vec v) {
  v *= s;
  return v;
}
inline Vec operator*(Vec v, double s) {
  v *= s;
  return v;
}

inline double dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dot: dimensions differ: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

/// 2D cross product a.x*b.y - a.y*b.x.
inline double cross(const Vec& a, const Vec& b) {
  if (a.dim() != 2 || b.dim() != 2) throw DimensionMismatch("cross: requires dimension 2");
  return a[0] * b[1] - a[1] * b[0];
}

/// Largest absolute coordinate; 0 for the empty vector.
inline double max_abs(const Vec& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::fabs(a[i]));
  return m;
}

}  // namespace signseq
