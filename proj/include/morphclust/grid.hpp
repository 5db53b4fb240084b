#ifndef MORPHCLUST_GRID_HPP
#define MORPHCLUST_GRID_HPP

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "morphclust/geometry.hpp"

namespace morphclust {

// Dense boolean occupancy grid over 1..res per dimension. 2D grids are
// stored as a single z-slice (depth 1) so 2D and 3D share one code path.
struct Grid {
    int dim = 2;
    int res = 0;
    std::vector<std::uint8_t> occ;

    int depth() const { return dim == 3 ? res : 1; }
    std::size_t cell_count() const
    {
        return static_cast<std::size_t>(res) * static_cast<std::size_t>(res)
             * static_cast<std::size_t>(depth());
    }

    bool in_bounds(int x, int y, int z) const
    {
        return x >= 1 && x <= res && y >= 1 && y <= res && z >= 1 && z <= depth();
    }

    // Raster order: z slowest, then y, x fastest.
    std::size_t flat(int x, int y, int z) const
    {
        assert(in_bounds(x, y, z));
        return (static_cast<std::size_t>(z - 1) * static_cast<std::size_t>(res)
                + static_cast<std::size_t>(y - 1)) * static_cast<std::size_t>(res)
             + static_cast<std::size_t>(x - 1);
    }

    Cell unflat(std::size_t idx) const
    {
        const auto r = static_cast<std::size_t>(res);
        Cell c;
        c.x = static_cast<int>(idx % r) + 1;
        c.y = static_cast<int>((idx / r) % r) + 1;
        c.z = static_cast<int>(idx / (r * r)) + 1;
        return c;
    }

    bool test(int x, int y, int z) const { return occ[flat(x, y, z)] != 0; }
    void set(int x, int y, int z, bool v = true) { occ[flat(x, y, z)] = v ? 1 : 0; }

    std::size_t popcount() const;
};

enum class SEKind { disk, sphere, square3, cube3 };

// Set of integer offsets defining a dilation neighborhood. Always contains
// the origin and is symmetric (o present implies -o present).
struct StructuringElement {
    int dim = 2;
    std::vector<std::array<int, 3>> offsets; // z offset is 0 for 2D

    bool contains_origin() const;
    bool is_symmetric() const;
};

// Builds a grid whose occupancy is true exactly at the given cells.
// Throws EmptyGrid on an empty cell set, CellOutOfRange on a cell outside 1..res.
Grid init_grid(const CellSet& cells, int res, int dim);

// disk: 2D offsets with squared norm <= 1 (5 offsets). sphere: the 3D analog
// (7 offsets). square3/cube3: the full 3x3 / 3x3x3 neighborhoods.
// Throws InvalidElement when the kind does not match the dimension.
StructuringElement make_structuring_element(SEKind kind, int dim);

// Binary dilation: output cell v is true iff some offset o has v - o true in g.
// Translations landing outside the grid are clipped; g itself is not modified.
Grid dilate(const Grid& g, const StructuringElement& se);

} // namespace morphclust

#endif
