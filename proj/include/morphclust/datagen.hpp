#ifndef MORPHCLUST_DATAGEN_HPP
#define MORPHCLUST_DATAGEN_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "morphclust/geometry.hpp"
#include "morphclust/metrics.hpp"

namespace morphclust {

// Isotropic Gaussian blobs. spread is the per-axis standard deviation.
struct BlobSpec {
    int dim = 2;
    std::vector<std::array<double, 3>> centers;
    double spread = 0.6;
    int points_per_blob = 250;
    std::uint64_t seed = 1;
};

// Two interleaved half-circles with Gaussian jitter.
struct MoonsSpec {
    int points_per_moon = 200;
    double radius = 1.0;
    double gap = 0.3;
    double jitter = 0.05;
    std::uint64_t seed = 1;
};

// Labels are the blob index + 1; points are emitted blob-major. The generator
// is pinned to mt19937_64 + Box-Muller so identical seeds give bit-identical
// datasets on every platform.
std::pair<Dataset, LabelVector> generate_blobs(const BlobSpec& spec);

// Moon 1 is the upper arc of a circle of the given radius at the origin;
// moon 2 is its reflection shifted right by radius and down by gap - radius/2.
// Same pinned generator as generate_blobs.
std::pair<Dataset, LabelVector> generate_moons(const MoonsSpec& spec);

} // namespace morphclust

#endif
