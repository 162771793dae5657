#include "signseq/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace signseq {

namespace {

void append_point(std::ostringstream& s, double x, double y) {
  s << x << ' ' << y;
}

}  // namespace

std::string trajectory_svg(std::span<const Vec> partial_sums, const NormSpec& spec,
                           double outline_radius) {
  for (const Vec& p : partial_sums) {
    if (p.dim() != 2) throw DimensionMismatch("trajectory_svg: requires dimension 2");
  }
  if (!(outline_radius > 0.0)) throw std::invalid_argument("trajectory_svg: outline radius <= 0");
  const double scale = 200.0 / outline_radius;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\" "
       "viewBox=\"-220 -220 440 440\">\n";
  s << "  <g transform=\"scale(1,-1)\">\n";

  // Bound-ball outline: the unit ball scaled by the outline radius lands on
  // a 200-unit circumradius.
  if (spec.kind() == NormKind::euclidean) {
    s << "    <circle cx=\"0\" cy=\"0\" r=\"200\" fill=\"none\" stroke=\"#888\" "
         "stroke-width=\"1\"/>\n";
  } else {
    std::vector<Vec> unit;
    switch (spec.kind()) {
      case NormKind::l1:
        unit = {Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}};
        break;
      case NormKind::linf:
        unit = {Vec{1, 1}, Vec{-1, 1}, Vec{-1, -1}, Vec{1, -1}};
        break;
      default:
        unit = spec.gauge()->vertices();
        break;
    }
    s << "    <polygon points=\"";
    for (std::size_t i = 0; i < unit.size(); ++i) {
      if (i) s << ' ';
      append_point(s, 200.0 * unit[i][0], 200.0 * unit[i][1]);
    }
    s << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  }

  s << "    <path d=\"M 0 0";
  for (const Vec& p : partial_sums) {
    s << " L ";
    append_point(s, scale * p[0], scale * p[1]);
  }
  s << "\" fill=\"none\" stroke=\"#c22\" stroke-width=\"1.5\"/>\n";
  s << "  </g>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace signseq
