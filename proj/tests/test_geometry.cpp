#include "doctest.h"

#include <cmath>
#include <random>

#include "morphclust/errors.hpp"
#include "morphclust/geometry.hpp"

using namespace morphclust;

namespace {

Dataset make_dataset(int dim, std::initializer_list<double> coords)
{
    Dataset d;
    d.dim = dim;
    d.coords = coords;
    return d;
}

} // namespace

TEST_CASE("fit_scale computes per-dimension min and range")
{
    const auto d = make_dataset(2, {0, 0, 10, 5});
    const auto p = fit_scale(d, 100);
    CHECK(p.min[0] == 0.0);
    CHECK(p.min[1] == 0.0);
    CHECK(p.range[0] == 10.0);
    CHECK(p.range[1] == 5.0);
    CHECK_FALSE(p.degenerate[0]);
    CHECK_FALSE(p.degenerate[1]);
}

TEST_CASE("fit_scale handles all-negative data")
{
    const auto d = make_dataset(2, {-1, -1, 1, 1});
    const auto p = fit_scale(d, 100);
    CHECK(p.min[0] == -1.0);
    CHECK(p.min[1] == -1.0);
    CHECK(p.range[0] == 2.0);
    CHECK(p.range[1] == 2.0);
}

TEST_CASE("fit_scale flags degenerate dimensions")
{
    const auto d = make_dataset(2, {2, 7, 2, 9});
    const auto p = fit_scale(d, 100);
    CHECK(p.degenerate[0]);
    CHECK(p.range[0] == 0.0);
    CHECK_FALSE(p.degenerate[1]);
}

TEST_CASE("fit_scale rejects non-finite coordinates and bad resolution")
{
    auto d = make_dataset(2, {0, 0, 1, 1});
    CHECK_THROWS_AS(fit_scale(d, 1), InvalidData);
    d.coords[2] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(fit_scale(d, 100), InvalidData);
    d.coords[2] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(fit_scale(d, 100), InvalidData);
}

TEST_CASE("scale_points maps min to 0, max to R, midpoint to R/2")
{
    const auto d = make_dataset(2, {0, 0, 10, 5, 5, 2.5});
    const auto p = fit_scale(d, 100);
    const auto s = scale_points(d, p);
    CHECK(s.point(0)[0] == doctest::Approx(0.0));
    CHECK(s.point(0)[1] == doctest::Approx(0.0));
    CHECK(s.point(1)[0] == doctest::Approx(100.0));
    CHECK(s.point(1)[1] == doctest::Approx(100.0));
    CHECK(s.point(2)[0] == doctest::Approx(50.0));
    CHECK(s.point(2)[1] == doctest::Approx(50.0));
}

TEST_CASE("scale_points sends degenerate dimensions to R/2")
{
    const auto d = make_dataset(2, {2, 7, 2, 9});
    const auto p = fit_scale(d, 100);
    const auto s = scale_points(d, p);
    CHECK(s.point(0)[0] == 50.0);
    CHECK(s.point(1)[0] == 50.0);
}

TEST_CASE("rasterize rounds half-up and clamps into 1..R")
{
    ScaledDataset s;
    s.dim = 2;
    s.coords = {50.4, 49.6};
    auto cells = rasterize(s, 100);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0] == Cell{50, 50, 1});

    s.coords = {0.2, 0.3};
    cells = rasterize(s, 100);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0] == Cell{1, 1, 1});

    s.coords = {100.0, 100.0, 99.7, 99.6};
    cells = rasterize(s, 100);
    REQUIRE(cells.size() == 1); // both snap to (100,100)
    CHECK(cells[0] == Cell{100, 100, 1});
}

TEST_CASE("rasterize collapses duplicate cells")
{
    ScaledDataset s;
    s.dim = 2;
    s.coords = {10.1, 10.2, 9.9, 9.8};
    const auto cells = rasterize(s, 100);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0] == Cell{10, 10, 1});
}

TEST_CASE("unscale_points inverts the max and min cases")
{
    const auto d = make_dataset(2, {0, 0, 10, 5});
    const auto p = fit_scale(d, 100);

    ScaledDataset s;
    s.dim = 2;
    s.coords = {100, 100, 0, 0};
    const auto back = unscale_points(s, p);
    CHECK(back.point(0)[0] == doctest::Approx(10.0));
    CHECK(back.point(0)[1] == doctest::Approx(5.0));
    CHECK(back.point(1)[0] == doctest::Approx(0.0));
    CHECK(back.point(1)[1] == doctest::Approx(0.0));
}

TEST_CASE("scale/unscale round trip and monotonicity on random datasets")
{
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> span(-100.0, 100.0);

    for (int trial = 0; trial < 200; ++trial) {
        const int dim = trial % 2 == 0 ? 2 : 3;
        const std::size_t n = 2 + rng() % 40;
        Dataset d;
        d.dim = dim;
        const double offset = span(rng); // exercises all-negative ranges too
        for (std::size_t i = 0; i < n * static_cast<std::size_t>(dim); ++i)
            d.coords.push_back(offset + span(rng) * 0.1);
        if (trial % 5 == 0) { // force a degenerate dimension
            for (std::size_t i = 0; i < n; ++i)
                d.point(i)[dim - 1] = offset;
        }

        const auto p = fit_scale(d, 100);
        const auto s = scale_points(d, p);
        for (double c : s.coords) {
            CHECK(c >= 0.0);
            CHECK(c <= 100.0);
        }

        for (const Cell& c : rasterize(s, 100)) {
            CHECK(c.x >= 1);
            CHECK(c.x <= 100);
            CHECK(c.y >= 1);
            CHECK(c.y <= 100);
            CHECK(c.z >= 1);
            CHECK(c.z <= (dim == 3 ? 100 : 1));
        }

        const auto back = unscale_points(s, p);
        for (std::size_t i = 0; i < d.coords.size(); ++i)
            CHECK(std::abs(back.coords[i] - d.coords[i])
                  <= 1e-9 * (1.0 + std::abs(d.coords[i])));

        // monotone per dimension
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (int dd = 0; dd < dim; ++dd)
                if (d.point(i)[dd] < d.point(i + 1)[dd])
                    CHECK(s.point(i)[dd] <= s.point(i + 1)[dd]);
    }
}
