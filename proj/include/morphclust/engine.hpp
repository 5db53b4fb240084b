#ifndef MORPHCLUST_ENGINE_HPP
#define MORPHCLUST_ENGINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "morphclust/components.hpp"
#include "morphclust/geometry.hpp"
#include "morphclust/grid.hpp"
#include "morphclust/nearest_map.hpp"

namespace morphclust {

enum class NoisePolicy { none, fixed, auto_paper, auto_robust };
enum class AssignMode { bruteforce, grid_transform };

struct ClusterConfig {
    int k = 1;
    int res = 100;     // grid resolution R
    int max_iter = 0;  // 0 = default R/2
    std::optional<SEKind> se_kind; // unset = disk for 2D, sphere for 3D
    Connectivity connectivity = Connectivity::full;
    NoisePolicy noise_policy = NoisePolicy::none;
    double noise_threshold = 0.0; // T_d for NoisePolicy::fixed, scaled units
    AssignMode assign_mode = AssignMode::bruteforce;

    int effective_max_iter() const { return max_iter > 0 ? max_iter : res / 2; }
};

// Throws InvalidData when a config field is out of contract.
void validate_config(const ClusterConfig& cfg, int dim);

// Nearest cell of one component to a query point, in scaled units.
struct NearestHit {
    double distance = 0.0;
    Cell cell;
    int component = 0;
};

struct ClusterResult {
    std::vector<int> labels;           // per point; 0 = noise
    std::vector<double> min_distances; // per point, scaled units
    int iterations_used = 0;
    std::vector<int> component_count_trace; // entry 0 = initial labeling, then one per dilation
    std::optional<double> noise_threshold_used;
};

struct GrowOutcome {
    LabeledGrid labeling;
    int iterations_used = 0;
    std::vector<int> component_count_trace;
};

// Runs dilate -> label -> threshold -> filter -> relabel until the component
// count reaches cfg.k or the iteration cap. If the count never equals k, the
// most recent labeling with count >= k is reduced to its k largest components.
// Throws InsufficientComponents when the initial grid has fewer than k domains
// (dilation merges domains and can never split them).
GrowOutcome grow_until_k(const Grid& initial, const ClusterConfig& cfg);

// Minimum Euclidean distance from a point (scaled units) to a component's
// cells, treated as integer-coordinate points. Ties break toward the earlier
// cell in raster order. Throws NoComponents on an empty cell list.
NearestHit min_distance_to_component(const double* point, int dim,
                                     const std::vector<Cell>& cells, int component_id);

// Population variance of the minimum distances (auto_paper) or
// mean + 3 * standard deviation (auto_robust).
double auto_noise_threshold(const std::vector<double>& min_distances, NoisePolicy mode);

// Labels every point with its nearest component (ties toward the lower id).
// Under a noise policy, points farther than T_d from every component get
// label 0; the keep rule is d <= T_d.
ClusterResult assign_labels(const ScaledDataset& scaled, const LabeledGrid& lg,
                            const ClusterConfig& cfg);

struct ClusterOutput {
    ClusterResult result;
    Dataset points; // input points mapped back to raw units, same order
};

// Full pipeline: fit_scale -> scale_points -> rasterize -> init_grid ->
// grow_until_k -> assign_labels -> unscale_points.
ClusterOutput cluster(const Dataset& data, const ClusterConfig& cfg);

} // namespace morphclust

#endif
