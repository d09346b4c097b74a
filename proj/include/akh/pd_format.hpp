#pragma once

#include <string>

#include "akh/diagram.hpp"

namespace akh {

// Annular PD document (JSON):
//   crossings   [[a, b, c, d], ...]  arc ids counterclockwise from the incoming under-arc
//   arcs        [{"id", "orientation", "ray"}]  orientation +1 runs from the arc's first
//               occurrence to its second (occurrences ordered by crossing, then slot);
//               optional for arcs touching an under slot. Arcs with no occurrence are
//               crossingless circles and "ray" is their winding.
//   marked      arc id
//   odd_linking optional bool
//   axis        optional "left" | "right": side of the marked arc facing the axis
//   meridians   optional bool
AnnularDiagram parse_annular_pd(const std::string& document, int cap = kDefaultCap);
std::string to_annular_pd(const AnnularDiagram& d);

}  // namespace akh
