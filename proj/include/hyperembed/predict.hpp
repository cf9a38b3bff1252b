#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperembed/metrics.hpp"
#include "hyperembed/model.hpp"

namespace hyperembed {

enum class SplitMode { by_timestamp, random_edges };

struct SplitSpec {
    double train_fraction = 0.8;
    SplitMode mode = SplitMode::by_timestamp;
    std::uint64_t seed = 0;     // random mode
    int max_attempts = 100;     // random mode connectivity retries
};

struct TrainTestSplit {
    Hypergraph train;
    Hypergraph test;
    int attempts = 1;  // random-mode redraws used
};

// Edge-disjoint split. Timestamp mode orders edges by ascending time (ties
// by file order) and takes the first floor(fraction * m) as training.
// Random mode shuffles with the seed and redraws until the training
// hypergraph's binarized graph is connected.
TrainTestSplit split(const Hypergraph& h, const SplitSpec& spec,
                     const CardinalityWeights& weights);

using Triple = std::array<NodeId, 3>;

// All node triples of the (already LCC-restricted) training hypergraph,
// excluding triples present as training triadic edges, in canonical
// (lexicographic) order.
std::vector<Triple> candidate_triples(const Hypergraph& train);

// Positive labels: candidate appears as a triadic edge of `test`
// (both hypergraphs in the same restricted indexing).
std::vector<bool> positive_labels(const std::vector<Triple>& candidates,
                                  const Hypergraph& test);

struct PredictionConfig {
    std::vector<double> c3_grid;                   // c2* fixed at 1
    std::pair<double, double> gamma_range{1e-3, 1e4};
    int gamma_grid_points = 30;
    int dims = 3;          // linear embedding dimensions
    double eig_floor = 0.01;
    std::uint64_t seed = 0;  // random scores and AUC-PR tie-breaks

    static std::vector<double> default_c3_grid();  // 0, 0.1, ..., 1.5
};

struct LinearModelFit {
    double c3_star = 0.0;
    double gamma_star = 0.0;
    double train_log_likelihood = 0.0;
    Eigen::MatrixXd coords;  // winning embedding of the training graph
};

// Fits (c3*, gamma*) by maximizing training log-likelihood over the grid,
// embeds the training graph, and scores candidates by hyperedge
// probability under the fitted linear model.
LinearModelFit fit_linear_model(const Hypergraph& train,
                                const PredictionConfig& config);
std::vector<double> score_linear_model(const LinearModelFit& fit,
                                       const std::vector<Triple>& candidates);

struct MeanScores {
    std::vector<double> arithmetic;
    std::vector<double> geometric;
    std::vector<double> harmonic;
};

// Baselines from the training graph's dyadic weights; geometric and
// harmonic are zero whenever a pair weight is zero.
MeanScores score_means(const Hypergraph& train,
                       const std::vector<Triple>& candidates);

struct MethodResult {
    std::string method;
    double auc_pr = 0.0;
};

struct PredictionReport {
    double train_fraction = 0.0;
    std::string split_mode;
    std::uint64_t seed = 0;
    int split_attempts = 1;
    std::size_t lcc_nodes = 0;
    std::size_t train_edges = 0;
    std::size_t test_edges = 0;
    std::size_t candidates = 0;
    std::size_t positives = 0;
    double base_rate = 0.0;
    double c3_star = 0.0;
    double gamma_star = 0.0;
    std::vector<MethodResult> methods;  // random, linear-model, arithmetic,
                                        // geometric, harmonic
};

// Full pipeline: split, LCC restriction, candidate enumeration, five
// scoring methods, AUC-PR per method.
PredictionReport run_prediction(const Hypergraph& h, const SplitSpec& spec,
                                const PredictionConfig& config);

}  // namespace hyperembed
