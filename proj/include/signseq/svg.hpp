#pragma once

#include <span>
#include <string>

#include "signseq/norms.hpp"
#include "signseq/vec.hpp"

namespace signseq {

/// Renders the signed partial-sum trajectory as an SVG document: one path
/// through the n partial sums starting at the origin, plus the outline of
/// the bound ball scaled so it inscribes a 400-unit viewport. 2D only.
std::string trajectory_svg(std::span<const Vec> partial_sums, const NormSpec& spec,
                           double outline_radius);

}  // namespace signseq
