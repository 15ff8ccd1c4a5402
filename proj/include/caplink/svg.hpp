#ifndef CAPLINK_SVG_HPP
#define CAPLINK_SVG_HPP

#include "caplink/linking.hpp"
#include "caplink/slice.hpp"

#include <optional>
#include <string>

namespace caplink {

// Plot window in the z = 1 chart.
struct PlotWindow {
    double x0 = -2.0;
    double x1 = 2.0;
    double y0 = -2.0;
    double y1 = 2.0;
    int grid = 96;    // marching-squares resolution
    int size_px = 640;
};

// Static SVG: zero sets of R (blue) and S (red) by marching squares, base
// points as dots with rotation arrows for their signs, the oriented line
// with an arrowhead, and a small legend. Rasterization is the only place in
// the toolkit that touches floating point.
std::string emit_svg(const CoorientedBase& base, const OrientedLine* line,
                     const LinkingReport* linking, const PlotWindow& window);

} // namespace caplink

#endif
