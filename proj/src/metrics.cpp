#include "hyperembed/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "hyperembed/errors.hpp"

namespace hyperembed {

namespace {

struct KMeansRun {
    std::vector<int> labels;
    double inertia = 0.0;
};

KMeansRun lloyd_once(const Eigen::MatrixXd& points, int k,
                     std::mt19937_64& rng) {
    const int n = static_cast<int>(points.rows());
    const int d = static_cast<int>(points.cols());
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // k-means++ seeding
    Eigen::MatrixXd centers(k, d);
    std::vector<double> dist2(n, std::numeric_limits<double>::infinity());
    {
        std::uniform_int_distribution<int> pick(0, n - 1);
        centers.row(0) = points.row(pick(rng));
        for (int c = 1; c < k; ++c) {
            double total = 0.0;
            for (int i = 0; i < n; ++i) {
                double d2 = (points.row(i) - centers.row(c - 1)).squaredNorm();
                dist2[i] = std::min(dist2[i], d2);
                total += dist2[i];
            }
            int chosen = n - 1;
            if (total > 0.0) {
                double target = unif(rng) * total;
                double acc = 0.0;
                for (int i = 0; i < n; ++i) {
                    acc += dist2[i];
                    if (acc >= target) {
                        chosen = i;
                        break;
                    }
                }
            } else {
                chosen = std::uniform_int_distribution<int>(0, n - 1)(rng);
            }
            centers.row(c) = points.row(chosen);
        }
    }

    std::vector<int> labels(n, 0), counts(k);
    for (int iter = 0; iter < 300; ++iter) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                double d2 = (points.row(i) - centers.row(c)).squaredNorm();
                if (d2 < best_d) {
                    best_d = d2;
                    best = c;
                }
            }
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }
        if (!changed && iter > 0) break;

        centers.setZero();
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < n; ++i) {
            centers.row(labels[i]) += points.row(i);
            ++counts[labels[i]];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) {
                centers.row(c) /= counts[c];
            } else {
                // Empty cluster: reseat at the point farthest from its center.
                int far = 0;
                double far_d = -1.0;
                for (int i = 0; i < n; ++i) {
                    double d2 =
                        (points.row(i) - centers.row(labels[i])).squaredNorm();
                    if (d2 > far_d) {
                        far_d = d2;
                        far = i;
                    }
                }
                centers.row(c) = points.row(far);
            }
        }
    }

    KMeansRun run;
    run.labels = std::move(labels);
    run.inertia = 0.0;
    for (int i = 0; i < n; ++i)
        run.inertia += (points.row(i) - centers.row(run.labels[i])).squaredNorm();
    return run;
}

}  // namespace

Clustering kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                  int restarts) {
    const int n = static_cast<int>(points.rows());
    if (k < 1 || k > n)
        throw ConfigError("kmeans requires 1 <= K <= number of points");
    if (restarts < 1) throw ConfigError("kmeans needs at least one restart");

    std::mt19937_64 rng(seed);
    Clustering best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        KMeansRun run = lloyd_once(points, k, rng);
        if (run.inertia < best.inertia) {
            best.labels = std::move(run.labels);
            best.inertia = run.inertia;
            best.restarts_used = r + 1;
        }
    }
    best.restarts_used = restarts;
    return best;
}

double ari(const std::vector<int>& labels_a, const std::vector<int>& labels_b) {
    if (labels_a.size() != labels_b.size())
        throw ConfigError("ARI label vectors differ in length");
    const std::size_t n = labels_a.size();
    if (n == 0) throw ConfigError("ARI of empty partitions");

    std::map<std::pair<int, int>, long long> table;
    std::map<int, long long> row, col;
    for (std::size_t i = 0; i < n; ++i) {
        ++table[{labels_a[i], labels_b[i]}];
        ++row[labels_a[i]];
        ++col[labels_b[i]];
    }
    auto comb2 = [](long long x) { return 0.5 * x * (x - 1); };
    double sum_ij = 0.0, sum_a = 0.0, sum_b = 0.0;
    for (const auto& [key, cnt] : table) sum_ij += comb2(cnt);
    for (const auto& [key, cnt] : row) sum_a += comb2(cnt);
    for (const auto& [key, cnt] : col) sum_b += comb2(cnt);
    double total = comb2(static_cast<long long>(n));
    double expected = sum_a * sum_b / total;
    double max_index = 0.5 * (sum_a + sum_b);
    if (max_index == expected) return 1.0;  // both partitions trivial
    return (sum_ij - expected) / (max_index - expected);
}

PRCurve auc_pr(const std::vector<std::pair<double, bool>>& scored,
               std::uint64_t seed) {
    std::size_t positives = 0;
    for (const auto& [s, pos] : scored) positives += pos ? 1 : 0;
    if (positives == 0)
        throw NumericalError("AUC-PR undefined: no positive examples");

    std::vector<std::size_t> order(scored.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return scored[a].first > scored[b].first;
                     });

    PRCurve curve;
    curve.points.reserve(positives);
    double tp = 0.0;
    double ap = 0.0;
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (!scored[order[rank]].second) continue;
        tp += 1.0;
        double precision = tp / static_cast<double>(rank + 1);
        double recall = tp / static_cast<double>(positives);
        curve.points.emplace_back(recall, precision);
        ap += precision;
    }
    curve.auc = ap / static_cast<double>(positives);
    return curve;
}

}  // namespace hyperembed
