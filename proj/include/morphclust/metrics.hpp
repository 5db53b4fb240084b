#ifndef MORPHCLUST_METRICS_HPP
#define MORPHCLUST_METRICS_HPP

#include <vector>

namespace morphclust {

// Per-point cluster labels; 0 marks noise, regular clusters are 1-based.
using LabelVector = std::vector<int>;

struct AccuracyReport {
    double accuracy = 0.0;          // matched correct count / n
    std::vector<int> pred_to_gt;    // index = predicted id - 1, value = matched GT id (0 = unmatched)
    std::vector<int> matched_counts; // per GT id: size of the predicted cluster mapped to it
    int noise_count = 0;            // predictions labeled 0 (always counted incorrect)
};

// Best-permutation matching accuracy ("true positive rate"): maximizes the
// number of points where the mapped prediction equals the ground truth over
// all injective maps from predicted ids to GT ids. Brute-force over
// permutations; throws Unsupported beyond 10 clusters, ShapeError on length
// mismatch.
AccuracyReport accuracy_tp(const LabelVector& pred, const LabelVector& gt, int k);

struct ClusterCounts {
    std::vector<int> per_cluster; // counts for ids 1..k
    int noise = 0;                // count of label 0
};

ClusterCounts cluster_counts(const LabelVector& labels, int k);

} // namespace morphclust

#endif
