#include "morphclust/nearest_map.hpp"

#include <algorithm>
#include <limits>

#include "morphclust/errors.hpp"

namespace morphclust {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// One-dimensional lower-envelope distance transform (squared distances) with
// argmin propagation. f holds per-position costs (kInf where empty); writes
// the minimized cost and the winning source position.
void edt_line(const std::vector<std::int64_t>& f, int n,
              std::vector<std::int64_t>& out_d2, std::vector<int>& out_arg,
              std::vector<int>& v, std::vector<double>& z)
{
    int k = -1;
    for (int q = 0; q < n; ++q) {
        if (f[static_cast<std::size_t>(q)] >= kInf)
            continue;
        if (k < 0) {
            k = 0;
            v[0] = q;
            z[0] = -std::numeric_limits<double>::infinity();
            z[1] = std::numeric_limits<double>::infinity();
            continue;
        }
        double s;
        for (;;) {
            const int p = v[static_cast<std::size_t>(k)];
            s = (static_cast<double>(f[static_cast<std::size_t>(q)] - f[static_cast<std::size_t>(p)])
                 + static_cast<double>(q) * q - static_cast<double>(p) * p)
              / (2.0 * (q - p));
            if (s > z[static_cast<std::size_t>(k)])
                break;
            --k; // q's parabola dominates the previous one everywhere right of s
        }
        ++k;
        v[static_cast<std::size_t>(k)] = q;
        z[static_cast<std::size_t>(k)] = s;
        z[static_cast<std::size_t>(k) + 1] = std::numeric_limits<double>::infinity();
    }

    if (k < 0) {
        std::fill_n(out_d2.begin(), n, kInf);
        std::fill_n(out_arg.begin(), n, -1);
        return;
    }

    int j = 0;
    for (int x = 0; x < n; ++x) {
        while (z[static_cast<std::size_t>(j) + 1] < static_cast<double>(x))
            ++j;
        const int p = v[static_cast<std::size_t>(j)];
        const std::int64_t dx = x - p;
        out_d2[static_cast<std::size_t>(x)] = dx * dx + f[static_cast<std::size_t>(p)];
        out_arg[static_cast<std::size_t>(x)] = p;
    }
}

// Exact feature transform for one component: per cell, squared distance to the
// nearest cell of the component and that cell's flat index.
struct ComponentTransform {
    std::vector<std::int64_t> d2;
    std::vector<std::int32_t> site;
};

ComponentTransform component_transform(const LabeledGrid& lg, int id)
{
    const int r = lg.res;
    const int zmax = lg.depth();
    const std::size_t cells = static_cast<std::size_t>(r) * static_cast<std::size_t>(r)
                            * static_cast<std::size_t>(zmax);

    ComponentTransform ct;
    ct.d2.assign(cells, kInf);
    // nearest-site coordinates, accumulated axis by axis (0-based)
    std::vector<std::int32_t> sx(cells, -1), sy(cells, -1), sz(cells, 0);

    const auto flat = [r](int x0, int y0, int z0) {
        return (static_cast<std::size_t>(z0) * static_cast<std::size_t>(r)
                + static_cast<std::size_t>(y0)) * static_cast<std::size_t>(r)
             + static_cast<std::size_t>(x0);
    };

    // Pass 1 (x): two sweeps per row; ties keep the lower x.
    for (const Cell& c : lg.component_cells(id)) {
        const std::size_t i = flat(c.x - 1, c.y - 1, c.z - 1);
        ct.d2[i] = 0;
        sx[i] = c.x - 1;
    }
    for (int z0 = 0; z0 < zmax; ++z0)
        for (int y0 = 0; y0 < r; ++y0) {
            const std::size_t row = flat(0, y0, z0);
            for (int x0 = 1; x0 < r; ++x0) { // left to right
                const std::size_t i = row + static_cast<std::size_t>(x0);
                if (sx[i - 1] < 0)
                    continue;
                const std::int64_t dx = x0 - sx[i - 1];
                if (dx * dx < ct.d2[i]) {
                    ct.d2[i] = dx * dx;
                    sx[i] = sx[i - 1];
                }
            }
            for (int x0 = r - 2; x0 >= 0; --x0) { // right to left
                const std::size_t i = row + static_cast<std::size_t>(x0);
                if (sx[i + 1] < 0)
                    continue;
                const std::int64_t dx = sx[i + 1] - x0;
                if (dx * dx < ct.d2[i]) {
                    ct.d2[i] = dx * dx;
                    sx[i] = sx[i + 1];
                }
            }
        }

    // Passes 2 and 3 (y, then z for 3D): lower-envelope transform per line.
    std::vector<std::int64_t> f(static_cast<std::size_t>(r)), g(static_cast<std::size_t>(r));
    std::vector<int> arg(static_cast<std::size_t>(r)), v(static_cast<std::size_t>(r) + 1);
    std::vector<double> zbuf(static_cast<std::size_t>(r) + 2);
    std::vector<std::int32_t> carry_x(static_cast<std::size_t>(r));

    for (int z0 = 0; z0 < zmax; ++z0)
        for (int x0 = 0; x0 < r; ++x0) {
            for (int y0 = 0; y0 < r; ++y0)
                f[static_cast<std::size_t>(y0)] = ct.d2[flat(x0, y0, z0)];
            edt_line(f, r, g, arg, v, zbuf);
            for (int y0 = 0; y0 < r; ++y0)
                carry_x[static_cast<std::size_t>(y0)] =
                    arg[static_cast<std::size_t>(y0)] >= 0
                        ? sx[flat(x0, arg[static_cast<std::size_t>(y0)], z0)]
                        : -1;
            for (int y0 = 0; y0 < r; ++y0) {
                const std::size_t i = flat(x0, y0, z0);
                ct.d2[i] = g[static_cast<std::size_t>(y0)];
                sy[i] = arg[static_cast<std::size_t>(y0)];
                sx[i] = carry_x[static_cast<std::size_t>(y0)];
            }
        }

    if (zmax > 1) {
        std::vector<std::int32_t> carry_y(static_cast<std::size_t>(r));
        for (int y0 = 0; y0 < r; ++y0)
            for (int x0 = 0; x0 < r; ++x0) {
                for (int z0 = 0; z0 < zmax; ++z0)
                    f[static_cast<std::size_t>(z0)] = ct.d2[flat(x0, y0, z0)];
                edt_line(f, zmax, g, arg, v, zbuf);
                for (int z0 = 0; z0 < zmax; ++z0) {
                    const int a = arg[static_cast<std::size_t>(z0)];
                    carry_x[static_cast<std::size_t>(z0)] = a >= 0 ? sx[flat(x0, y0, a)] : -1;
                    carry_y[static_cast<std::size_t>(z0)] = a >= 0 ? sy[flat(x0, y0, a)] : -1;
                }
                for (int z0 = 0; z0 < zmax; ++z0) {
                    const std::size_t i = flat(x0, y0, z0);
                    ct.d2[i] = g[static_cast<std::size_t>(z0)];
                    sz[i] = arg[static_cast<std::size_t>(z0)];
                    sx[i] = carry_x[static_cast<std::size_t>(z0)];
                    sy[i] = carry_y[static_cast<std::size_t>(z0)];
                }
            }
    }

    ct.site.resize(cells);
    for (std::size_t i = 0; i < cells; ++i)
        ct.site[i] = static_cast<std::int32_t>(flat(sx[i], sy[i], sz[i]));
    return ct;
}

} // namespace

NearestMap nearest_label_transform(const LabeledGrid& lg)
{
    if (lg.num_components() == 0)
        throw NoComponents("nearest-label transform needs at least one component");

    NearestMap map;
    map.dim = lg.dim;
    map.res = lg.res;

    const std::size_t cells = static_cast<std::size_t>(lg.res) * static_cast<std::size_t>(lg.res)
                            * static_cast<std::size_t>(lg.depth());
    map.site.assign(cells, -1);
    map.comp.assign(cells, 0);
    map.other_d2.assign(cells, kInf);

    std::vector<std::int64_t> best_d2(cells, kInf);
    for (int id = 1; id <= lg.num_components(); ++id) {
        const ComponentTransform ct = component_transform(lg, id);
        for (std::size_t i = 0; i < cells; ++i) {
            if (ct.d2[i] < best_d2[i]) { // strict: exact ties keep the lower id
                map.other_d2[i] = std::min(map.other_d2[i], best_d2[i]);
                best_d2[i] = ct.d2[i];
                map.site[i] = ct.site[i];
                map.comp[i] = id;
            } else if (ct.d2[i] < map.other_d2[i]) {
                map.other_d2[i] = ct.d2[i];
            }
        }
    }

    return map;
}

} // namespace morphclust
