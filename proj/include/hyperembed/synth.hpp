#pragma once

#include <cstdint>
#include <vector>

#include "hyperembed/model.hpp"

namespace hyperembed {

// Plan for a clustered synthetic hypergraph: K clusters of m nodes at
// evenly spaced centers (on the line or the circle), per-node uniform
// noise of half-width `a`, hyperedges drawn from the range-dependent
// model with decay gamma0.
struct ClusterPlan {
    int K = 1;
    int m = 1;
    double a = 0.0;  // radians for periodic geometry
    Geometry geometry = Geometry::linear;
    double gamma0 = 1.0;
    CardinalityWeights weights;
    int max_cardinality = 3;
    std::uint64_t seed = 0;
};

struct PlantedPositions {
    Positions pos;
    std::vector<int> labels;  // cluster index per node, 0..K-1
};

// Linear: x_i = 2(l-1)/K + unif(-a, a); periodic: theta_i = 2*pi*(l-1)/K
// + unif(-a, a). Deterministic per plan seed.
PlantedPositions plant_positions(const ClusterPlan& plan);

struct SynthResult {
    Hypergraph h;
    Positions pos;
    std::vector<int> labels;
    int attempts = 0;
};

// Samples hypergraphs from the plan until the binarized Laplacian graph is
// connected. Throws NumericalError after max_attempts, reporting the last
// attempt's component sizes.
SynthResult generate_until_connected(const ClusterPlan& plan,
                                     int max_attempts = 100);

}  // namespace hyperembed
