#ifndef MORPHCLUST_KMEANS_HPP
#define MORPHCLUST_KMEANS_HPP

#include <cstdint>

#include "morphclust/geometry.hpp"
#include "morphclust/metrics.hpp"

namespace morphclust {

// Lloyd's algorithm with deterministic seeding: the first center is drawn
// from the seeded generator, the rest greedily maximize the distance to the
// centers chosen so far. Runs to an assignment fixpoint or max_iter; empty
// clusters are repaired by reseeding on the point farthest from its center.
// Labels are 1..k. Throws InsufficientPoints when n < k.
LabelVector kmeans(const Dataset& data, int k, std::uint64_t seed, int max_iter = 100);

} // namespace morphclust

#endif
