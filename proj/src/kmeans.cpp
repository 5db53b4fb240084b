#include "morphclust/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "morphclust/errors.hpp"

namespace morphclust {

namespace {

double dist2(const double* a, const double* b, int dim)
{
    double s = 0.0;
    for (int d = 0; d < dim; ++d) {
        const double diff = a[d] - b[d];
        s += diff * diff;
    }
    return s;
}

} // namespace

LabelVector kmeans(const Dataset& data, int k, std::uint64_t seed, int max_iter)
{
    validate_dataset(data);
    const std::size_t n = data.size();
    if (k < 1 || n < static_cast<std::size_t>(k))
        throw InsufficientPoints("k-means needs at least k points, got n="
                                 + std::to_string(n) + ", k=" + std::to_string(k));

    const int dim = data.dim;
    std::vector<double> centers(static_cast<std::size_t>(k) * static_cast<std::size_t>(dim));
    const auto center = [&](int j) { return centers.data() + static_cast<std::size_t>(j) * dim; };

    // Seeding: random first center, then greedy farthest point. Modulo keeps
    // the draw identical across platforms (std::uniform_int_distribution is
    // implementation-defined).
    std::mt19937_64 rng(seed);
    const std::size_t first = static_cast<std::size_t>(rng() % n);
    std::copy_n(data.point(first), dim, center(0));

    std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
    for (int j = 1; j < k; ++j) {
        std::size_t far = 0;
        double far_d2 = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            min_d2[i] = std::min(min_d2[i], dist2(data.point(i), center(j - 1), dim));
            if (min_d2[i] > far_d2) {
                far_d2 = min_d2[i];
                far = i;
            }
        }
        std::copy_n(data.point(far), dim, center(j));
    }

    LabelVector labels(n, 0);
    std::vector<double> sums(static_cast<std::size_t>(k) * static_cast<std::size_t>(dim));
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k));

    for (int iter = 0; iter < max_iter; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 1;
            double best_d2 = dist2(data.point(i), center(0), dim);
            for (int j = 1; j < k; ++j) {
                const double d2 = dist2(data.point(i), center(j), dim);
                if (d2 < best_d2) { // strict: ties keep the lower center id
                    best_d2 = d2;
                    best = j + 1;
                }
            }
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }

        // Empty-cluster repair: reseed on the point farthest from its center.
        for (int j = 0; j < k; ++j) {
            if (std::count(labels.begin(), labels.end(), j + 1) > 0)
                continue;
            std::size_t far = 0;
            double far_d2 = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d2 = dist2(data.point(i), center(labels[i] - 1), dim);
                if (d2 > far_d2) {
                    far_d2 = d2;
                    far = i;
                }
            }
            labels[far] = j + 1;
            changed = true;
        }

        if (!changed)
            break;

        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(sizes.begin(), sizes.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const int j = labels[i] - 1;
            sizes[static_cast<std::size_t>(j)]++;
            for (int d = 0; d < dim; ++d)
                sums[static_cast<std::size_t>(j) * dim + d] += data.point(i)[d];
        }
        for (int j = 0; j < k; ++j)
            for (int d = 0; d < dim; ++d)
                centers[static_cast<std::size_t>(j) * dim + d] =
                    sums[static_cast<std::size_t>(j) * dim + d]
                    / static_cast<double>(sizes[static_cast<std::size_t>(j)]);
    }

    return labels;
}

} // namespace morphclust
