#ifndef MORPHCLUST_NEAREST_MAP_HPP
#define MORPHCLUST_NEAREST_MAP_HPP

#include <cstdint>
#include <vector>

#include "morphclust/components.hpp"

namespace morphclust {

// Nearest labeled cell and its component id for every grid cell, exact in
// squared Euclidean distance between cell centers. other_d2 holds the best
// squared distance to any component OTHER than the stored one (INT64_MAX when
// only one component exists); it bounds how close a competing component can
// get to a query point inside the cell, which is what lets point lookups
// certify their answer without scanning component cells.
struct NearestMap {
    int dim = 2;
    int res = 0;
    std::vector<std::int32_t> site;     // flat index of the nearest labeled cell
    std::vector<std::int32_t> comp;     // its component id (ties toward lower id)
    std::vector<std::int64_t> other_d2; // best d^2 over all other components

    int depth() const { return dim == 3 ? res : 1; }
};

// Builds the map via a separable exact distance transform per component.
// Throws NoComponents when the grid has no components.
NearestMap nearest_label_transform(const LabeledGrid& lg);

} // namespace morphclust

#endif
