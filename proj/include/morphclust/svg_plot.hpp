#ifndef MORPHCLUST_SVG_PLOT_HPP
#define MORPHCLUST_SVG_PLOT_HPP

#include <string>

#include "morphclust/geometry.hpp"
#include "morphclust/metrics.hpp"

namespace morphclust {

// Renders one circle per point into an SVG 1.1 document: a fixed palette
// color per nonzero label, gray for noise (label 0), axes auto-fit to the
// bounding box with a 5% margin. Output is byte-identical for identical
// inputs. Throws Unsupported for 3D data.
void emit_svg_scatter(const std::string& path, const Dataset& data, const LabelVector& labels);

// Same rendering, returned as a string (used by tests and emit_svg_scatter).
std::string render_svg_scatter(const Dataset& data, const LabelVector& labels);

} // namespace morphclust

#endif
