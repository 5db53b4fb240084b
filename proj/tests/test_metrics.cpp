#include "doctest.h"

#include "morphclust/datagen.hpp"
#include "morphclust/errors.hpp"
#include "morphclust/kmeans.hpp"
#include "morphclust/metrics.hpp"

using namespace morphclust;

TEST_CASE("accuracy_tp is exact on identity and permuted labelings")
{
    const LabelVector gt{1, 1, 2, 2, 3, 3};
    CHECK(accuracy_tp(gt, gt, 3).accuracy == doctest::Approx(1.0));

    const LabelVector swapped{2, 2, 1, 1, 3, 3};
    CHECK(accuracy_tp(swapped, gt, 3).accuracy == doctest::Approx(1.0));

    const LabelVector relabeled{3, 3, 1, 1, 2, 2};
    CHECK(accuracy_tp(relabeled, gt, 3).accuracy == doctest::Approx(1.0));
}

TEST_CASE("one wrong point out of ten scores 0.9")
{
    LabelVector gt(10, 1), pred(10, 1);
    for (std::size_t i = 5; i < 10; ++i) {
        gt[i] = 2;
        pred[i] = 2;
    }
    pred[0] = 2;
    CHECK(accuracy_tp(pred, gt, 2).accuracy == doctest::Approx(0.9));
}

TEST_CASE("noise predictions always count as wrong")
{
    const LabelVector gt{1, 1, 2, 2};
    const LabelVector pred{1, 0, 2, 0};
    const auto report = accuracy_tp(pred, gt, 2);
    CHECK(report.accuracy == doctest::Approx(0.5));
    CHECK(report.noise_count == 2);
}

TEST_CASE("accuracy_tp reports the matched mapping and counts")
{
    const LabelVector gt{1, 1, 1, 2, 2, 3};
    const LabelVector pred{2, 2, 2, 3, 3, 1};
    const auto report = accuracy_tp(pred, gt, 3);
    CHECK(report.accuracy == doctest::Approx(1.0));
    REQUIRE(report.pred_to_gt.size() == 3);
    CHECK(report.pred_to_gt[0] == 3);
    CHECK(report.pred_to_gt[1] == 1);
    CHECK(report.pred_to_gt[2] == 2);
    CHECK(report.matched_counts == std::vector<int>{3, 2, 1});
}

TEST_CASE("accuracy_tp rejects bad shapes and too many clusters")
{
    CHECK_THROWS_AS(accuracy_tp({1, 2}, {1}, 2), ShapeError);
    CHECK_THROWS_AS(accuracy_tp({1}, {5}, 2), ShapeError);
    const LabelVector big(4, 1);
    CHECK_THROWS_AS(accuracy_tp(big, big, 11), Unsupported);
}

TEST_CASE("cluster_counts tallies ids and noise")
{
    const auto a = cluster_counts({1, 1, 2}, 2);
    CHECK(a.per_cluster == std::vector<int>{2, 1});
    CHECK(a.noise == 0);

    const auto b = cluster_counts({0, 1}, 1);
    CHECK(b.per_cluster == std::vector<int>{1});
    CHECK(b.noise == 1);

    const auto c = cluster_counts({3, 3, 3}, 3);
    CHECK(c.per_cluster == std::vector<int>{0, 0, 3});
}

TEST_CASE("kmeans separates two obvious singletons")
{
    Dataset d;
    d.dim = 2;
    d.coords = {0, 0, 10, 10};
    const auto labels = kmeans(d, 2, 1);
    CHECK(labels[0] != labels[1]);
}

TEST_CASE("kmeans on identical points with k=1")
{
    Dataset d;
    d.dim = 2;
    d.coords = {3, 3, 3, 3, 3, 3};
    const auto labels = kmeans(d, 1, 9);
    CHECK(labels == LabelVector{1, 1, 1});
}

TEST_CASE("kmeans recovers well-separated blobs")
{
    BlobSpec spec;
    spec.centers = {{{1, 1, 0}}, {{-1, -1, 0}}, {{1, -1, 0}}};
    spec.spread = 0.15;
    spec.points_per_blob = 50;
    spec.seed = 3;
    const auto [data, gt] = generate_blobs(spec);
    const auto labels = kmeans(data, 3, 7);
    CHECK(accuracy_tp(labels, gt, 3).accuracy == doctest::Approx(1.0));
}

TEST_CASE("kmeans is deterministic per seed")
{
    BlobSpec spec;
    spec.centers = {{{0, 0, 0}}, {{4, 4, 0}}};
    spec.spread = 0.8;
    spec.points_per_blob = 60;
    spec.seed = 11;
    const auto [data, gt] = generate_blobs(spec);
    CHECK(kmeans(data, 2, 42) == kmeans(data, 2, 42));
}

TEST_CASE("kmeans stays valid when duplicates starve a cluster")
{
    // two distinct locations, k=3: one cluster can only be kept alive by the
    // empty-cluster repair, and the run must still end with all ids in 1..3
    Dataset d;
    d.dim = 2;
    d.coords = {0, 0, 0, 0, 0, 0, 10, 10};
    const auto labels = kmeans(d, 3, 2);
    REQUIRE(labels.size() == 4);
    const auto counts = cluster_counts(labels, 3);
    for (int c : counts.per_cluster)
        CHECK(c >= 1);
    CHECK(counts.noise == 0);
}

TEST_CASE("kmeans needs at least k points")
{
    Dataset d;
    d.dim = 2;
    d.coords = {0, 0};
    CHECK_THROWS_AS(kmeans(d, 2, 1), InsufficientPoints);
}
