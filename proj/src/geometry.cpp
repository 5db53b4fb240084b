#include "morphclust/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "morphclust/errors.hpp"

namespace morphclust {

void validate_dataset(const Dataset& data)
{
    if (data.dim != 2 && data.dim != 3)
        throw InvalidData("dataset dimension must be 2 or 3, got " + std::to_string(data.dim));
    if (data.coords.empty())
        throw InvalidData("dataset is empty");
    if (data.coords.size() % static_cast<std::size_t>(data.dim) != 0)
        throw InvalidData("coordinate buffer length is not a multiple of the dimension");
    for (double c : data.coords) {
        if (!std::isfinite(c))
            throw InvalidData("dataset contains a non-finite coordinate");
    }
}

ScaleParams fit_scale(const Dataset& data, int res)
{
    validate_dataset(data);
    if (res < 2)
        throw InvalidData("grid resolution must be at least 2, got " + std::to_string(res));

    ScaleParams params;
    params.dim = data.dim;
    params.res = res;

    for (int d = 0; d < data.dim; ++d) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double v = data.point(i)[d];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        params.min[d] = lo;
        params.range[d] = hi - lo;
        params.degenerate[d] = (params.range[d] == 0.0);
    }
    return params;
}

ScaledDataset scale_points(const Dataset& data, const ScaleParams& params)
{
    ScaledDataset scaled;
    scaled.dim = data.dim;
    scaled.coords.resize(data.coords.size());

    const double r = static_cast<double>(params.res);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double* p = data.point(i);
        double* q = scaled.point(i);
        for (int d = 0; d < data.dim; ++d) {
            const double v = params.degenerate[d]
                ? r / 2.0
                : r * (p[d] - params.min[d]) / params.range[d];
            // the division can land one ulp outside [0, R]
            q[d] = std::clamp(v, 0.0, r);
        }
    }
    return scaled;
}

CellSet rasterize(const ScaledDataset& scaled, int res)
{
    CellSet cells;
    cells.reserve(scaled.size());
    // Half-up rounding, then clamp so coordinates below 0.5 land in cell 1.
    const auto snap = [res](double v) {
        return std::clamp(static_cast<int>(std::floor(v + 0.5)), 1, res);
    };

    for (std::size_t i = 0; i < scaled.size(); ++i) {
        const double* p = scaled.point(i);
        Cell c;
        c.x = snap(p[0]);
        c.y = snap(p[1]);
        c.z = scaled.dim == 3 ? snap(p[2]) : 1;
        cells.push_back(c);
    }

    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

Dataset unscale_points(const ScaledDataset& scaled, const ScaleParams& params)
{
    Dataset out;
    out.dim = scaled.dim;
    out.coords.resize(scaled.coords.size());

    const double r = static_cast<double>(params.res);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        const double* p = scaled.point(i);
        double* q = out.point(i);
        for (int d = 0; d < scaled.dim; ++d)
            q[d] = p[d] * params.range[d] / r + params.min[d];
    }
    return out;
}

} // namespace morphclust
