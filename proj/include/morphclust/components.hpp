#ifndef MORPHCLUST_COMPONENTS_HPP
#define MORPHCLUST_COMPONENTS_HPP

#include <cstdint>
#include <vector>

#include "morphclust/grid.hpp"

namespace morphclust {

enum class Connectivity { face, full };

// Connected-component labeling of a grid. Component ids are consecutive
// 1..L in first-encounter raster order; 0 marks background. Each component's
// cell list is kept in raster order.
struct LabeledGrid {
    int dim = 2;
    int res = 0;
    std::vector<std::int32_t> labels;
    std::vector<std::vector<Cell>> components; // components[j] holds cells of id j+1

    int num_components() const { return static_cast<int>(components.size()); }
    std::size_t component_size(int id) const { return components[static_cast<std::size_t>(id - 1)].size(); }
    const std::vector<Cell>& component_cells(int id) const { return components[static_cast<std::size_t>(id - 1)]; }

    int depth() const { return dim == 3 ? res : 1; }
    std::size_t flat(int x, int y, int z) const
    {
        return (static_cast<std::size_t>(z - 1) * static_cast<std::size_t>(res)
                + static_cast<std::size_t>(y - 1)) * static_cast<std::size_t>(res)
             + static_cast<std::size_t>(x - 1);
    }
    std::int32_t label_at(int x, int y, int z) const { return labels[flat(x, y, z)]; }
};

// What filter_small_domains removed.
struct FilterReport {
    double threshold = 0.0; // T_s, cells
    std::vector<int> removed_ids;
    std::vector<Cell> removed_cells;
};

// Labels connected domains. face = 4/6-adjacency, full = 8/26-adjacency.
// An empty grid yields zero components.
LabeledGrid label_components(const Grid& g, Connectivity conn);

// Mean component size in cells. Throws NoComponents when L = 0.
double size_threshold(const LabeledGrid& lg);

// Clears every component whose size is strictly below the threshold.
// If the threshold would remove everything, the largest component (lowest id
// on ties) is kept so at least one domain always survives; unreachable when
// the threshold is the mean size.
std::pair<Grid, FilterReport> filter_small_domains(const Grid& g, const LabeledGrid& lg,
                                                   double threshold);

} // namespace morphclust

#endif
