#ifndef ENTLAB_SVG_HPP
#define ENTLAB_SVG_HPP

#include <string>
#include <vector>

#include "entlab/ordering.hpp"

namespace entlab::svg {

// Minimal scatter plot of an [E_in, E_out] diagram: one circle per point,
// colored by family, with axes and the reference line E_out = E_in bounding
// the region reachable by deterministic local channels. No plotting
// dependency; plain path/circle emission.
std::string diagram_scatter(const std::vector<DiagramPoint>& points,
                            const std::string& title);

}  // namespace entlab::svg

#endif
