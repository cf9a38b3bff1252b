#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

namespace hyperembed {

struct Clustering {
    std::vector<int> labels;  // cluster index per point, 0..K-1
    double inertia = 0.0;     // within-cluster sum of squares
    int restarts_used = 0;
};

// Lloyd's algorithm from k-means++ initialization; best of `restarts` runs
// by inertia (ties by restart index), so the result is deterministic for a
// given seed. Periodic callers should pass (cos theta, sin theta) points.
Clustering kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                  int restarts = 20);

// Adjusted Rand Index between two partitions; 1 for identical partitions,
// ~0 in expectation for independent ones.
double ari(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

struct PRCurve {
    std::vector<std::pair<double, double>> points;  // (recall, precision)
    double auc = 0.0;  // average precision
};

// Average precision with randomized tie-breaking: items are shuffled with
// the seed, then stably sorted by score descending. Throws
// NumericalError when there are no positives.
PRCurve auc_pr(const std::vector<std::pair<double, bool>>& scored,
               std::uint64_t seed = 0);

}  // namespace hyperembed
