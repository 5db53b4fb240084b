#include "morphclust/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "morphclust/errors.hpp"

namespace morphclust {

void validate_config(const ClusterConfig& cfg, int dim)
{
    if (dim != 2 && dim != 3)
        throw InvalidData("dimension must be 2 or 3");
    if (cfg.k < 1)
        throw InvalidData("cluster count k must be at least 1");
    if (cfg.res < 2)
        throw InvalidData("grid resolution must be at least 2");
    const std::size_t cells = static_cast<std::size_t>(cfg.res) * static_cast<std::size_t>(cfg.res)
                            * (dim == 3 ? static_cast<std::size_t>(cfg.res) : 1);
    if (cells > (std::size_t{1} << 24))
        throw InvalidData("grid of " + std::to_string(cells) + " cells exceeds the supported size");
    if (cfg.effective_max_iter() < 1)
        throw InvalidData("max iterations must be at least 1");
    if (cfg.noise_policy == NoisePolicy::fixed && !(cfg.noise_threshold > 0.0))
        throw InvalidData("fixed noise threshold must be positive");
}

namespace {

SEKind resolve_se_kind(const ClusterConfig& cfg, int dim)
{
    if (cfg.se_kind)
        return *cfg.se_kind;
    return dim == 3 ? SEKind::sphere : SEKind::disk;
}

// Reduce a labeling to its k largest components (ties toward the lower id),
// relabeled 1..k in raster first-encounter order. Dropping whole components
// cannot merge or split the survivors, so ascending old id preserves the
// raster order of first encounters.
LabeledGrid keep_k_largest(const LabeledGrid& lg, int k)
{
    std::vector<int> ids(static_cast<std::size_t>(lg.num_components()));
    for (int i = 0; i < lg.num_components(); ++i)
        ids[static_cast<std::size_t>(i)] = i + 1;
    std::stable_sort(ids.begin(), ids.end(), [&lg](int a, int b) {
        return lg.component_size(a) > lg.component_size(b);
    });
    ids.resize(static_cast<std::size_t>(k));
    std::sort(ids.begin(), ids.end());

    LabeledGrid out;
    out.dim = lg.dim;
    out.res = lg.res;
    out.labels.assign(lg.labels.size(), 0);
    for (int new_id = 1; new_id <= k; ++new_id) {
        const int old_id = ids[static_cast<std::size_t>(new_id - 1)];
        out.components.push_back(lg.component_cells(old_id));
        for (const Cell& c : out.components.back())
            out.labels[out.flat(c.x, c.y, c.z)] = new_id;
    }
    return out;
}

} // namespace

GrowOutcome grow_until_k(const Grid& initial, const ClusterConfig& cfg)
{
    const SEKind kind = resolve_se_kind(cfg, initial.dim);
    const StructuringElement se = make_structuring_element(kind, initial.dim);
    const int max_iter = cfg.effective_max_iter();

    GrowOutcome out;
    LabeledGrid lg = label_components(initial, cfg.connectivity);
    out.component_count_trace.push_back(lg.num_components());

    if (lg.num_components() < cfg.k)
        throw InsufficientComponents(
            "initial grid has " + std::to_string(lg.num_components()) + " domains but k="
            + std::to_string(cfg.k) + "; dilation can only merge domains");

    if (lg.num_components() == cfg.k) {
        out.labeling = std::move(lg);
        return out;
    }

    Grid g = initial;
    LabeledGrid snapshot = std::move(lg); // most recent labeling with count >= k

    for (int iter = 1; iter <= max_iter; ++iter) {
        g = dilate(g, se);
        LabeledGrid dilated = label_components(g, cfg.connectivity);
        const double ts = size_threshold(dilated);
        auto [filtered, report] = filter_small_domains(g, dilated, ts);
        g = std::move(filtered);
        LabeledGrid relabeled = label_components(g, cfg.connectivity);

        out.iterations_used = iter;
        const int count = relabeled.num_components();
        out.component_count_trace.push_back(count);

        if (count == cfg.k) {
            out.labeling = std::move(relabeled);
            return out;
        }
        if (count < cfg.k)
            break; // overshot: fall back to the retained snapshot
        snapshot = std::move(relabeled);
    }

    out.labeling = keep_k_largest(snapshot, cfg.k);
    return out;
}

NearestHit min_distance_to_component(const double* point, int dim,
                                     const std::vector<Cell>& cells, int component_id)
{
    if (cells.empty())
        throw NoComponents("component has no cells");

    NearestHit best;
    best.component = component_id;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (const Cell& c : cells) { // raster order, so strict < keeps the earliest tie
        const double dx = point[0] - static_cast<double>(c.x);
        const double dy = point[1] - static_cast<double>(c.y);
        const double dz = dim == 3 ? point[2] - static_cast<double>(c.z) : 0.0;
        const double d2 = dx * dx + dy * dy + dz * dz;
        if (d2 < best_d2) {
            best_d2 = d2;
            best.cell = c;
        }
    }
    best.distance = std::sqrt(best_d2);
    return best;
}

double auto_noise_threshold(const std::vector<double>& min_distances, NoisePolicy mode)
{
    const auto n = static_cast<double>(min_distances.size());
    double mean = 0.0;
    for (double d : min_distances)
        mean += d;
    mean /= n;

    double var = 0.0;
    for (double d : min_distances)
        var += (d - mean) * (d - mean);
    var /= n;

    return mode == NoisePolicy::auto_robust ? mean + 3.0 * std::sqrt(var) : var;
}

namespace {

struct PointHit {
    int label = 0;
    double distance = 0.0;
};

PointHit brute_force_hit(const double* p, int dim, const LabeledGrid& lg)
{
    PointHit hit;
    double best = std::numeric_limits<double>::infinity();
    for (int id = 1; id <= lg.num_components(); ++id) { // ascending id: ties keep the lower
        const NearestHit nh = min_distance_to_component(p, dim, lg.component_cells(id), id);
        if (nh.distance < best) {
            best = nh.distance;
            hit.label = id;
            hit.distance = nh.distance;
        }
    }
    return hit;
}

// Fast path: look up the point's containing cell in the nearest-label map and
// certify the answer with the triangle inequality. The candidate distance u
// is exact to a real cell of the winning component; every other component is
// at least sqrt(other_d2) - r away, r being the point-to-cell-center offset.
// When the margin cannot be certified (near inter-component boundaries and
// exact ties) the point falls back to the brute-force scan, so labels agree
// with the oracle everywhere.
PointHit transform_hit(const double* p, int dim, const LabeledGrid& lg, const NearestMap& map)
{
    const int res = map.res;
    const auto snap = [res](double v) {
        return std::clamp(static_cast<int>(std::floor(v + 0.5)), 1, res);
    };
    const int cx = snap(p[0]);
    const int cy = snap(p[1]);
    const int cz = dim == 3 ? snap(p[2]) : 1;
    const std::size_t ci = lg.flat(cx, cy, cz);

    const double rx = p[0] - static_cast<double>(cx);
    const double ry = p[1] - static_cast<double>(cy);
    const double rz = dim == 3 ? p[2] - static_cast<double>(cz) : 0.0;
    const double r = std::sqrt(rx * rx + ry * ry + rz * rz);

    const auto site = static_cast<std::size_t>(map.site[ci]);
    const auto sc = [&](std::size_t idx) {
        const auto rr = static_cast<std::size_t>(res);
        Cell c;
        c.x = static_cast<int>(idx % rr) + 1;
        c.y = static_cast<int>((idx / rr) % rr) + 1;
        c.z = static_cast<int>(idx / (rr * rr)) + 1;
        return c;
    };
    const Cell s = sc(site);
    const double dx = p[0] - static_cast<double>(s.x);
    const double dy = p[1] - static_cast<double>(s.y);
    const double dz = dim == 3 ? p[2] - static_cast<double>(s.z) : 0.0;
    const double u = std::sqrt(dx * dx + dy * dy + dz * dz);

    // other_d2 is a huge sentinel when only one component exists, which
    // certifies unconditionally.
    const double other = std::sqrt(static_cast<double>(map.other_d2[ci]));
    if (u < other - r)
        return PointHit{map.comp[ci], u};
    return brute_force_hit(p, dim, lg);
}

} // namespace

ClusterResult assign_labels(const ScaledDataset& scaled, const LabeledGrid& lg,
                            const ClusterConfig& cfg)
{
    if (lg.num_components() == 0)
        throw NoComponents("cannot assign labels with no components");

    ClusterResult result;
    result.labels.resize(scaled.size());
    result.min_distances.resize(scaled.size());

    std::optional<NearestMap> map;
    if (cfg.assign_mode == AssignMode::grid_transform)
        map = nearest_label_transform(lg);

    for (std::size_t i = 0; i < scaled.size(); ++i) {
        const PointHit hit = map ? transform_hit(scaled.point(i), scaled.dim, lg, *map)
                                 : brute_force_hit(scaled.point(i), scaled.dim, lg);
        result.labels[i] = hit.label;
        result.min_distances[i] = hit.distance;
    }

    if (cfg.noise_policy != NoisePolicy::none) {
        const double td = cfg.noise_policy == NoisePolicy::fixed
                              ? cfg.noise_threshold
                              : auto_noise_threshold(result.min_distances, cfg.noise_policy);
        result.noise_threshold_used = td;
        for (std::size_t i = 0; i < scaled.size(); ++i) {
            if (result.min_distances[i] > td)
                result.labels[i] = 0;
        }
    }

    return result;
}

ClusterOutput cluster(const Dataset& data, const ClusterConfig& cfg)
{
    validate_dataset(data);
    validate_config(cfg, data.dim);

    const ScaleParams params = fit_scale(data, cfg.res);
    const ScaledDataset scaled = scale_points(data, params);
    const CellSet cells = rasterize(scaled, cfg.res);
    const Grid grid = init_grid(cells, cfg.res, data.dim);

    GrowOutcome grown = grow_until_k(grid, cfg);

    ClusterOutput out;
    out.result = assign_labels(scaled, grown.labeling, cfg);
    out.result.iterations_used = grown.iterations_used;
    out.result.component_count_trace = std::move(grown.component_count_trace);
    out.points = unscale_points(scaled, params);
    return out;
}

} // namespace morphclust
