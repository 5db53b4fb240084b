#ifndef MORPHCLUST_GEOMETRY_HPP
#define MORPHCLUST_GEOMETRY_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

namespace morphclust {

// Ordered list of 2- or 3-dimensional points in raw data units.
// Coordinates are stored row-major: point i occupies coords[i*dim .. i*dim+dim).
struct Dataset {
    int dim = 2;
    std::vector<double> coords;

    std::size_t size() const { return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0; }
    const double* point(std::size_t i) const { return coords.data() + i * static_cast<std::size_t>(dim); }
    double* point(std::size_t i) { return coords.data() + i * static_cast<std::size_t>(dim); }

    void push_back(const double* p) { coords.insert(coords.end(), p, p + dim); }
};

// Same layout as Dataset but coordinates live in the scaled space [0, R].
struct ScaledDataset {
    int dim = 2;
    std::vector<double> coords;

    std::size_t size() const { return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0; }
    const double* point(std::size_t i) const { return coords.data() + i * static_cast<std::size_t>(dim); }
    double* point(std::size_t i) { return coords.data() + i * static_cast<std::size_t>(dim); }
};

// Per-dimension affine transform raw -> [0, R]. A dimension with zero range
// is flagged degenerate and maps every point to R/2.
struct ScaleParams {
    int dim = 2;
    int res = 0; // R
    std::array<double, 3> min{{0, 0, 0}};
    std::array<double, 3> range{{0, 0, 0}};
    std::array<bool, 3> degenerate{{false, false, false}};
};

// Integer grid cell. Coordinates are 1-based (1..R); z is 1 for 2D data.
struct Cell {
    int x = 1;
    int y = 1;
    int z = 1;

    auto operator<=>(const Cell&) const = default;
};

// Sorted, duplicate-free list of cells.
using CellSet = std::vector<Cell>;

// Throws InvalidData if the dataset is empty, has an unsupported dimension,
// or contains a non-finite coordinate.
void validate_dataset(const Dataset& data);

// Computes per-dimension min and range for scaling onto a grid of resolution R.
// Throws InvalidData on invalid data or R < 2.
ScaleParams fit_scale(const Dataset& data, int res);

// Maps every coordinate to R*(p - min)/range; degenerate dimensions go to R/2.
ScaledDataset scale_points(const Dataset& data, const ScaleParams& params);

// Rounds each scaled coordinate half-up to the nearest integer, clamps into
// 1..res, and collapses duplicates. Result is sorted.
CellSet rasterize(const ScaledDataset& scaled, int res);

// Inverse of scale_points: p = P*range/R + min (degenerate dimensions return min).
Dataset unscale_points(const ScaledDataset& scaled, const ScaleParams& params);

} // namespace morphclust

#endif
