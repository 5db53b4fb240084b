#include "morphclust/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "morphclust/errors.hpp"

namespace morphclust {

namespace {

// Fixed 10-color palette (no gray, which is reserved for noise).
constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#bcbd22", "#17becf", "#aec7e8",
};
constexpr const char* kNoiseColor = "#808080";

constexpr double kViewSize = 800.0;
constexpr double kPointRadius = 4.0;

} // namespace

std::string render_svg_scatter(const Dataset& data, const LabelVector& labels)
{
    if (data.dim != 2)
        throw Unsupported("SVG scatter rendering supports 2D data only");
    validate_dataset(data);
    if (labels.size() != data.size())
        throw ShapeError("label count does not match point count");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (std::size_t i = 0; i < data.size(); ++i) {
        xmin = std::min(xmin, data.point(i)[0]);
        xmax = std::max(xmax, data.point(i)[0]);
        ymin = std::min(ymin, data.point(i)[1]);
        ymax = std::max(ymax, data.point(i)[1]);
    }
    const double xext = xmax - xmin > 0 ? xmax - xmin : 1.0;
    const double yext = ymax - ymin > 0 ? ymax - ymin : 1.0;
    const double x0 = xmin - 0.05 * xext;
    const double y0 = ymin - 0.05 * yext;
    const double xspan = 1.1 * xext;
    const double yspan = 1.1 * yext;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
           "height=\"800\" viewBox=\"0 0 800 800\">\n"
        << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

    char buf[128];
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double px = (data.point(i)[0] - x0) / xspan * kViewSize;
        const double py = kViewSize - (data.point(i)[1] - y0) / yspan * kViewSize;
        const int label = labels[i];
        const char* color = label == 0
            ? kNoiseColor
            : kPalette[static_cast<std::size_t>((label - 1) % static_cast<int>(kPalette.size()))];
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"%s\"/>\n",
                      px, py, kPointRadius, color);
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

void emit_svg_scatter(const std::string& path, const Dataset& data, const LabelVector& labels)
{
    const std::string doc = render_svg_scatter(data, labels);
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << doc))
        throw IoError("cannot write " + path);
}

} // namespace morphclust
