#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hyperembed/hypergraph.hpp"
#include "hyperembed/laplacian.hpp"
#include "hyperembed/spectral.hpp"

namespace hyperembed {

enum class Geometry { linear, periodic };

std::string to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

// Node positions: real coordinates (linear, n x d) or phase angles
// (periodic, radius-1 circle).
struct Positions {
    Geometry geometry = Geometry::linear;
    Eigen::MatrixXd coords;  // linear only
    Eigen::VectorXd theta;   // periodic only

    int n() const {
        return geometry == Geometry::linear ? static_cast<int>(coords.rows())
                                            : static_cast<int>(theta.size());
    }

    // Embedded points in Euclidean space; periodic angles map to
    // (cos theta, sin theta) so both geometries share one incoherence.
    Eigen::MatrixXd points() const;
};

Positions linear_positions(Eigen::MatrixXd coords);
Positions periodic_positions(Eigen::VectorXd theta);

// Range-dependent generative model: hyperedge on tuple R appears
// independently with probability 1/(1 + exp(gamma * c_|R| * I(x, R))).
struct ModelSpec {
    Geometry geometry = Geometry::linear;
    CardinalityWeights weights;
    double gamma = 1.0;
    int max_cardinality = 3;  // T of the tuple universe
};

// Incoherence of tuple R, summed over ordered node pairs (each unordered
// pair counts twice). Throws ConfigError on out-of-range nodes.
double incoherence_linear(const Eigen::MatrixXd& coords, const Edge& R);
double incoherence_periodic(const Eigen::VectorXd& theta, const Edge& R);
double incoherence(const Positions& pos, const Edge& R);

// Pairwise form on embedded points; shared by both geometries.
double incoherence_points(const Eigen::MatrixXd& points, const Edge& R);

double edge_probability(const ModelSpec& model, const Positions& pos,
                        const Edge& R);

struct LikelihoodReport {
    double log_likelihood = 0.0;
    double gamma_star = 0.0;
    double edge_term = 0.0;  // sum over present edges of ln(f/(1-f))
    double null_term = 0.0;  // sum over the universe of ln(1-f)
    int evaluations = 0;
    bool gamma_at_boundary = false;
};

// Precomputed per-tuple values c_|R| * I(x, R) over the whole universe,
// making repeated likelihood evaluations at different gamma cheap.
class LikelihoodWorkspace {
  public:
    LikelihoodWorkspace(const Positions& pos, const CardinalityWeights& weights,
                        const Hypergraph& h, int max_cardinality,
                        std::vector<std::string>* warnings = nullptr);

    LikelihoodReport evaluate(double gamma) const;
    double expected_edge_count(double gamma) const;
    std::size_t universe_size() const { return tuple_a_.size(); }
    const std::vector<double>& tuple_values() const { return tuple_a_; }

  private:
    std::vector<double> tuple_a_;
    double edge_a_sum_ = 0.0;
};

// Exact log-likelihood at fixed gamma, enumerating the full tuple universe.
LikelihoodReport log_likelihood(const ModelSpec& model, const Positions& pos,
                                const Hypergraph& h,
                                std::vector<std::string>* warnings = nullptr);

// Maximizes the (concave) log-likelihood over gamma in [lo, hi] by
// golden-section search on log(gamma) to relative tolerance 1e-6. When
// grid_points > 0 a log-spaced grid pass brackets the maximum first.
// A maximizer at the range boundary, or a gamma-independent likelihood,
// sets gamma_at_boundary.
LikelihoodReport fit_gamma(const LikelihoodWorkspace& ws,
                           std::pair<double, double> gamma_range,
                           int grid_points = 0);
LikelihoodReport fit_gamma(Geometry geometry,
                           const CardinalityWeights& weights,
                           const Positions& pos, const Hypergraph& h,
                           std::pair<double, double> gamma_range,
                           int grid_points = 0);

// Draws one hypergraph: every tuple of cardinality 2..T enumerated in
// canonical order, included independently. Deterministic given seed.
Hypergraph sample(const ModelSpec& model, const Positions& pos,
                  std::uint64_t seed);

struct ModelComparison {
    LikelihoodReport linear;
    LikelihoodReport periodic;
    Geometry winner = Geometry::linear;
    LinearEmbedding linear_embedding;
    PeriodicEmbedding periodic_embedding;
    std::vector<std::string> warnings;
};

// Embeds with both geometries, fits gamma for each, and picks the winner
// by maximum log-likelihood.
ModelComparison compare_models(const Hypergraph& h,
                               const CardinalityWeights& weights,
                               double eig_floor,
                               std::pair<double, double> gamma_range,
                               int d_linear = 1);

// Exhaustive search over all assignments of nodes to a discrete site set
// (integers 1..n for linear, equally spaced angles for periodic). Returns
// every permutation minimizing the total incoherence over observed edges.
// Refuses n > 9.
struct AssignmentSearch {
    std::vector<std::vector<int>> optimal_permutations;
    double min_incoherence = 0.0;
};

AssignmentSearch brute_force_optimal_assignment(
    const Hypergraph& h, const CardinalityWeights& weights, Geometry geometry);

// Site positions used by the brute-force search.
Positions discrete_sites(Geometry geometry, int n);

// Total incoherence over observed edges: sum_R c_|R| A_R I(x, R).
double total_incoherence(const Hypergraph& h, const CardinalityWeights& weights,
                         const Positions& pos);

// Visits every node tuple of cardinality 2..T in canonical order
// (cardinality ascending, then lexicographic).
void for_each_tuple(int n, int max_cardinality,
                    const std::function<void(const NodeId*, int)>& fn);

}  // namespace hyperembed
