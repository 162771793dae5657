#pragma once

#include <stdexcept>

namespace signseq {

/// Vectors of different dimensions used in one expression, or a norm applied
/// to a vector of an incompatible dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polygon vertex list failed validation (asymmetric, non-convex, degenerate,
/// or the origin is not strictly inside).
class InvalidPolygon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input vector lies outside the unit ball beyond tolerance.
class InputTooLong : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured size cap.
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace signseq
