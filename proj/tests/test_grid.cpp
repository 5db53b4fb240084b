#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "morphclust/errors.hpp"
#include "morphclust/grid.hpp"
#include "test_support.hpp"

using namespace morphclust;

TEST_CASE("init_grid sets exactly the given cells")
{
    const Grid g = init_grid({Cell{3, 4, 1}}, 10, 2);
    CHECK(g.popcount() == 1);
    CHECK(g.test(3, 4, 1));
}

TEST_CASE("init_grid rejects empty and out-of-range input")
{
    CHECK_THROWS_AS(init_grid({}, 10, 2), EmptyGrid);
    CHECK_THROWS_AS(init_grid({Cell{11, 1, 1}}, 10, 2), CellOutOfRange);
    CHECK_THROWS_AS(init_grid({Cell{0, 1, 1}}, 10, 2), CellOutOfRange);
    CHECK_THROWS_AS(init_grid({Cell{1, 1, 2}}, 10, 2), CellOutOfRange); // z must be 1 in 2D
}

TEST_CASE("structuring elements have the expected offset sets")
{
    const auto disk = make_structuring_element(SEKind::disk, 2);
    REQUIRE(disk.offsets.size() == 5);
    const std::set<std::array<int, 3>> want{
        {{0, 0, 0}}, {{1, 0, 0}}, {{-1, 0, 0}}, {{0, 1, 0}}, {{0, -1, 0}}};
    CHECK(std::set<std::array<int, 3>>(disk.offsets.begin(), disk.offsets.end()) == want);

    CHECK(make_structuring_element(SEKind::sphere, 3).offsets.size() == 7);
    CHECK(make_structuring_element(SEKind::square3, 2).offsets.size() == 9);
    CHECK(make_structuring_element(SEKind::cube3, 3).offsets.size() == 27);

    for (auto kind : {SEKind::disk, SEKind::square3}) {
        const auto se = make_structuring_element(kind, 2);
        CHECK(se.contains_origin());
        CHECK(se.is_symmetric());
    }
}

TEST_CASE("structuring element kind must match the dimension")
{
    CHECK_THROWS_AS(make_structuring_element(SEKind::disk, 3), InvalidElement);
    CHECK_THROWS_AS(make_structuring_element(SEKind::sphere, 2), InvalidElement);
    CHECK_THROWS_AS(make_structuring_element(SEKind::cube3, 2), InvalidElement);
    CHECK_THROWS_AS(make_structuring_element(SEKind::square3, 3), InvalidElement);
}

TEST_CASE("disk dilation grows a single cell into a plus shape")
{
    const Grid g = init_grid({Cell{5, 5, 1}}, 10, 2);
    const Grid d = dilate(g, make_structuring_element(SEKind::disk, 2));
    CHECK(d.popcount() == 5);
    for (const Cell& c : {Cell{5, 5, 1}, Cell{4, 5, 1}, Cell{6, 5, 1}, Cell{5, 4, 1}, Cell{5, 6, 1}})
        CHECK(d.test(c.x, c.y, c.z));
}

TEST_CASE("dilation clips at the boundary")
{
    const Grid g = init_grid({Cell{1, 1, 1}}, 10, 2);
    const Grid d = dilate(g, make_structuring_element(SEKind::disk, 2));
    CHECK(d.popcount() == 3);
    CHECK(d.test(1, 1, 1));
    CHECK(d.test(2, 1, 1));
    CHECK(d.test(1, 2, 1));
}

TEST_CASE("dilation properties on random grids")
{
    std::mt19937_64 rng(7);

    for (int dim : {2, 3}) {
        const int res = dim == 2 ? 24 : 12;
        const auto se = make_structuring_element(dim == 2 ? SEKind::disk : SEKind::sphere, dim);

        StructuringElement origin_only;
        origin_only.dim = dim;
        origin_only.offsets = {{0, 0, 0}};

        for (int trial = 0; trial < 50; ++trial) {
            const Grid g1 = mtest::random_grid(rng, dim, res, 0.1);
            const Grid d1 = dilate(g1, se);

            // extensivity and popcount monotonicity
            std::size_t on = 0;
            for (std::size_t i = 0; i < g1.occ.size(); ++i) {
                if (g1.occ[i]) {
                    ++on;
                    CHECK(d1.occ[i]);
                }
            }
            CHECK(d1.popcount() >= on);

            // monotonicity: g2 = g1 plus extra cells
            Grid g2 = g1;
            const Grid extra = mtest::random_grid(rng, dim, res, 0.05);
            for (std::size_t i = 0; i < g2.occ.size(); ++i)
                g2.occ[i] = g2.occ[i] | extra.occ[i];
            const Grid d2 = dilate(g2, se);
            for (std::size_t i = 0; i < d1.occ.size(); ++i)
                if (d1.occ[i])
                    CHECK(d2.occ[i]);

            // identity element
            const Grid same = dilate(g1, origin_only);
            CHECK(same.occ == g1.occ);
        }
    }
}

TEST_CASE("dilation is translation-equivariant away from boundaries")
{
    std::mt19937_64 rng(11);
    const auto se = make_structuring_element(SEKind::disk, 2);

    for (int trial = 0; trial < 20; ++trial) {
        // pattern confined to the middle so neither version clips
        Grid g;
        g.dim = 2;
        g.res = 20;
        g.occ.assign(g.cell_count(), 0);
        for (int i = 0; i < 12; ++i)
            g.set(8 + static_cast<int>(rng() % 4), 8 + static_cast<int>(rng() % 4), 1);

        Grid shifted = g;
        shifted.occ.assign(shifted.cell_count(), 0);
        const int tx = static_cast<int>(rng() % 5) - 2;
        const int ty = static_cast<int>(rng() % 5) - 2;
        for (int y = 1; y <= 20; ++y)
            for (int x = 1; x <= 20; ++x)
                if (g.test(x, y, 1))
                    shifted.set(x + tx, y + ty, 1);

        const Grid a = dilate(shifted, se);
        const Grid b = dilate(g, se);
        for (int y = 3; y <= 17; ++y)
            for (int x = 3; x <= 17; ++x)
                CHECK(a.test(x + tx, y + ty, 1) == b.test(x, y, 1));
    }
}
