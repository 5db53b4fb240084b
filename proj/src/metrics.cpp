#include "morphclust/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "morphclust/errors.hpp"

namespace morphclust {

AccuracyReport accuracy_tp(const LabelVector& pred, const LabelVector& gt, int k)
{
    if (pred.size() != gt.size())
        throw ShapeError("prediction and ground truth differ in length");
    if (k < 1 || k > 10)
        throw Unsupported("permutation matching supports 1..10 clusters, got "
                          + std::to_string(k));
    if (pred.empty())
        throw ShapeError("cannot score empty label vectors");

    int pred_ids = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (gt[i] < 1 || gt[i] > k)
            throw ShapeError("ground-truth label " + std::to_string(gt[i])
                             + " outside 1.." + std::to_string(k));
        if (pred[i] < 0)
            throw ShapeError("negative predicted label");
        pred_ids = std::max(pred_ids, pred[i]);
    }
    if (pred_ids > 10)
        throw Unsupported("permutation matching supports at most 10 predicted clusters");

    // Contingency counts over a square id range so next_permutation can
    // enumerate every injective map.
    const int m = std::max(k, pred_ids);
    std::vector<int> counts(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    int noise = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (pred[i] == 0) {
            ++noise; // noise predictions never match any GT id
            continue;
        }
        counts[static_cast<std::size_t>(pred[i] - 1) * static_cast<std::size_t>(m)
               + static_cast<std::size_t>(gt[i] - 1)]++;
    }

    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0); // perm[pred id - 1] = gt id - 1
    std::vector<int> best_perm = perm;
    long best_score = -1;
    do {
        long score = 0;
        for (int a = 0; a < m; ++a)
            score += counts[static_cast<std::size_t>(a) * static_cast<std::size_t>(m)
                            + static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])];
        if (score > best_score) {
            best_score = score;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    AccuracyReport report;
    report.noise_count = noise;
    report.accuracy = static_cast<double>(best_score) / static_cast<double>(pred.size());
    report.pred_to_gt.assign(static_cast<std::size_t>(pred_ids), 0);
    report.matched_counts.assign(static_cast<std::size_t>(k), 0);

    const ClusterCounts pc = cluster_counts(pred, pred_ids);
    for (int a = 1; a <= pred_ids; ++a) {
        const int g = best_perm[static_cast<std::size_t>(a - 1)] + 1;
        if (g <= k) {
            report.pred_to_gt[static_cast<std::size_t>(a - 1)] = g;
            report.matched_counts[static_cast<std::size_t>(g - 1)] =
                pc.per_cluster[static_cast<std::size_t>(a - 1)];
        }
    }
    return report;
}

ClusterCounts cluster_counts(const LabelVector& labels, int k)
{
    ClusterCounts out;
    out.per_cluster.assign(static_cast<std::size_t>(k), 0);
    for (int l : labels) {
        if (l == 0)
            ++out.noise;
        else if (l >= 1 && l <= k)
            ++out.per_cluster[static_cast<std::size_t>(l - 1)];
    }
    return out;
}

} // namespace morphclust
