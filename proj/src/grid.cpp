#include "morphclust/grid.hpp"

#include <algorithm>
#include <string>

#include "morphclust/errors.hpp"

namespace morphclust {

std::size_t Grid::popcount() const
{
    return static_cast<std::size_t>(std::count(occ.begin(), occ.end(), std::uint8_t{1}));
}

bool StructuringElement::contains_origin() const
{
    return std::find(offsets.begin(), offsets.end(), std::array<int, 3>{0, 0, 0})
        != offsets.end();
}

bool StructuringElement::is_symmetric() const
{
    for (const auto& o : offsets) {
        const std::array<int, 3> neg{-o[0], -o[1], -o[2]};
        if (std::find(offsets.begin(), offsets.end(), neg) == offsets.end())
            return false;
    }
    return true;
}

Grid init_grid(const CellSet& cells, int res, int dim)
{
    if (cells.empty())
        throw EmptyGrid("cannot initialize a grid from an empty cell set");

    Grid g;
    g.dim = dim;
    g.res = res;
    g.occ.assign(g.cell_count(), 0);

    for (const Cell& c : cells) {
        if (!g.in_bounds(c.x, c.y, c.z))
            throw CellOutOfRange("cell (" + std::to_string(c.x) + "," + std::to_string(c.y)
                                 + "," + std::to_string(c.z) + ") outside grid of resolution "
                                 + std::to_string(res));
        g.set(c.x, c.y, c.z);
    }
    return g;
}

StructuringElement make_structuring_element(SEKind kind, int dim)
{
    const bool wants_3d = (kind == SEKind::sphere || kind == SEKind::cube3);
    if ((dim == 2 && wants_3d) || (dim == 3 && !wants_3d) || (dim != 2 && dim != 3))
        throw InvalidElement("structuring element kind does not match dimension "
                             + std::to_string(dim));

    StructuringElement se;
    se.dim = dim;

    const int zr = dim == 3 ? 1 : 0;
    const bool ball = (kind == SEKind::disk || kind == SEKind::sphere);
    for (int dz = -zr; dz <= zr; ++dz)
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (ball && dx * dx + dy * dy + dz * dz > 1)
                    continue;
                se.offsets.push_back({dx, dy, dz});
            }
    return se;
}

Grid dilate(const Grid& g, const StructuringElement& se)
{
    Grid out = g; // extensive: every input cell stays set

    const int zmax = g.depth();
    for (int z = 1; z <= zmax; ++z)
        for (int y = 1; y <= g.res; ++y)
            for (int x = 1; x <= g.res; ++x) {
                if (!g.test(x, y, z))
                    continue;
                for (const auto& o : se.offsets) {
                    const int nx = x + o[0];
                    const int ny = y + o[1];
                    const int nz = z + o[2];
                    if (out.in_bounds(nx, ny, nz))
                        out.occ[out.flat(nx, ny, nz)] = 1;
                }
            }
    return out;
}

} // namespace morphclust
