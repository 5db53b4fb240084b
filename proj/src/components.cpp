#include "morphclust/components.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "morphclust/errors.hpp"

namespace morphclust {

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::int32_t find(std::int32_t i)
    {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]]; // path halving
            i = parent[i];
        }
        return i;
    }

    void unite(std::int32_t a, std::int32_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

// Offsets to neighbors that precede a cell in raster order.
std::vector<std::array<int, 3>> backward_neighbors(int dim, Connectivity conn)
{
    std::vector<std::array<int, 3>> out;
    const int zr = dim == 3 ? 1 : 0;
    for (int dz = -zr; dz <= 0; ++dz)
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                // keep offsets strictly before the origin in raster order
                if (dz > 0 || (dz == 0 && dy > 0) || (dz == 0 && dy == 0 && dx >= 0))
                    continue;
                if (conn == Connectivity::face && std::abs(dx) + std::abs(dy) + std::abs(dz) != 1)
                    continue;
                out.push_back({dx, dy, dz});
            }
    return out;
}

} // namespace

LabeledGrid label_components(const Grid& g, Connectivity conn)
{
    LabeledGrid lg;
    lg.dim = g.dim;
    lg.res = g.res;
    lg.labels.assign(g.cell_count(), 0);

    UnionFind uf(g.cell_count());
    const auto nbs = backward_neighbors(g.dim, conn);

    const int zmax = g.depth();
    for (int z = 1; z <= zmax; ++z)
        for (int y = 1; y <= g.res; ++y)
            for (int x = 1; x <= g.res; ++x) {
                if (!g.test(x, y, z))
                    continue;
                const auto idx = static_cast<std::int32_t>(g.flat(x, y, z));
                for (const auto& o : nbs) {
                    const int nx = x + o[0];
                    const int ny = y + o[1];
                    const int nz = z + o[2];
                    if (g.in_bounds(nx, ny, nz) && g.test(nx, ny, nz))
                        uf.unite(idx, static_cast<std::int32_t>(g.flat(nx, ny, nz)));
                }
            }

    // Assign ids 1..L in first-encounter raster order of each root, then
    // collect cells per component (also raster order).
    std::vector<std::int32_t> root_id(g.cell_count(), 0);
    std::int32_t next_id = 0;
    for (int z = 1; z <= zmax; ++z)
        for (int y = 1; y <= g.res; ++y)
            for (int x = 1; x <= g.res; ++x) {
                if (!g.test(x, y, z))
                    continue;
                const auto idx = static_cast<std::int32_t>(g.flat(x, y, z));
                const auto root = uf.find(idx);
                if (root_id[root] == 0) {
                    root_id[root] = ++next_id;
                    lg.components.emplace_back();
                }
                const auto id = root_id[root];
                lg.labels[static_cast<std::size_t>(idx)] = id;
                lg.components[static_cast<std::size_t>(id - 1)].push_back(Cell{x, y, z});
            }

    return lg;
}

double size_threshold(const LabeledGrid& lg)
{
    if (lg.num_components() == 0)
        throw NoComponents("size threshold undefined on a grid with no components");

    std::size_t total = 0;
    for (const auto& comp : lg.components)
        total += comp.size();
    return static_cast<double>(total) / static_cast<double>(lg.num_components());
}

std::pair<Grid, FilterReport> filter_small_domains(const Grid& g, const LabeledGrid& lg,
                                                   double threshold)
{
    FilterReport report;
    report.threshold = threshold;

    Grid out = g;

    // Survivor guarantee: never remove the largest component (lowest id on ties).
    int largest_id = 0;
    std::size_t largest_size = 0;
    for (int id = 1; id <= lg.num_components(); ++id) {
        if (lg.component_size(id) > largest_size) {
            largest_size = lg.component_size(id);
            largest_id = id;
        }
    }

    for (int id = 1; id <= lg.num_components(); ++id) {
        if (static_cast<double>(lg.component_size(id)) >= threshold || id == largest_id)
            continue;
        report.removed_ids.push_back(id);
        for (const Cell& c : lg.component_cells(id)) {
            out.occ[out.flat(c.x, c.y, c.z)] = 0;
            report.removed_cells.push_back(c);
        }
    }

    return {std::move(out), std::move(report)};
}

} // namespace morphclust
