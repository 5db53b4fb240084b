#include "morphclust/datagen.hpp"

#include <cmath>
#include <random>

#include "morphclust/errors.hpp"

namespace morphclust {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Deterministic cross-platform draws: mt19937_64 output mapped to (0,1) and
// pushed through Box-Muller. std::normal_distribution is implementation-
// defined, so it is deliberately avoided here.
struct PinnedRng {
    std::mt19937_64 state;

    explicit PinnedRng(std::uint64_t seed) : state(seed) {}

    double uniform01()
    {
        // 53-bit mantissa, offset by half a step so the value is never 0
        return (static_cast<double>(state() >> 11) + 0.5) * 0x1.0p-53;
    }

    double gaussian()
    {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }
};

} // namespace

std::pair<Dataset, LabelVector> generate_blobs(const BlobSpec& spec)
{
    if (spec.dim != 2 && spec.dim != 3)
        throw InvalidData("blob dimension must be 2 or 3");
    if (spec.centers.empty())
        throw InvalidData("blob spec needs at least one center");
    if (!(spec.spread >= 0.0) || !std::isfinite(spec.spread))
        throw InvalidData("blob spread must be finite and non-negative");
    if (spec.points_per_blob < 1)
        throw InvalidData("points per blob must be positive");

    PinnedRng rng(spec.seed);
    Dataset data;
    data.dim = spec.dim;
    LabelVector labels;

    for (std::size_t b = 0; b < spec.centers.size(); ++b) {
        for (int i = 0; i < spec.points_per_blob; ++i) {
            for (int d = 0; d < spec.dim; ++d)
                data.coords.push_back(spec.centers[b][static_cast<std::size_t>(d)]
                                      + spec.spread * rng.gaussian());
            labels.push_back(static_cast<int>(b) + 1);
        }
    }
    return {std::move(data), std::move(labels)};
}

std::pair<Dataset, LabelVector> generate_moons(const MoonsSpec& spec)
{
    if (spec.points_per_moon < 1 || !(spec.radius > 0.0) || !(spec.gap > 0.0)
        || spec.jitter < 0.0)
        throw InvalidData("moons spec fields must be positive (jitter may be zero)");

    PinnedRng rng(spec.seed);
    Dataset data;
    data.dim = 2;
    LabelVector labels;

    const double r = spec.radius;
    // Vertical placement interleaves the arcs; a larger gap pulls them apart.
    const double moon2_lift = r / 2.0 - spec.gap;

    for (int moon = 0; moon < 2; ++moon) {
        for (int i = 0; i < spec.points_per_moon; ++i) {
            const double t = rng.uniform01() * kTwoPi / 2.0; // angle in [0, pi)
            double x, y;
            if (moon == 0) {
                x = r * std::cos(t);
                y = r * std::sin(t);
            } else {
                x = r - r * std::cos(t);
                y = moon2_lift - r * std::sin(t);
            }
            x += spec.jitter * rng.gaussian();
            y += spec.jitter * rng.gaussian();
            data.coords.push_back(x);
            data.coords.push_back(y);
            labels.push_back(moon + 1);
        }
    }
    return {std::move(data), std::move(labels)};
}

} // namespace morphclust
