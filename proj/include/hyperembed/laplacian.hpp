#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <map>
#include <string>
#include <vector>

#include "hyperembed/hypergraph.hpp"

namespace hyperembed {

using SparseMat = Eigen::SparseMatrix<double>;

// Per-cardinality adjacency/degree/Laplacian matrices and the combined
// weighted Laplacian L = sum_t c_t (D^[t] - W^[t]).
struct LaplacianBundle {
    int n = 0;
    CardinalityWeights weights;
    std::map<int, SparseMat> W;           // t -> W^[t], symmetric, zero diagonal
    std::map<int, Eigen::VectorXd> degree;  // t -> diag(D^[t])
    std::map<int, SparseMat> Lt;          // t -> D^[t] - W^[t]
    SparseMat L;                          // combined
};

// W^[t]_{ij} = number of cardinality-t hyperedges containing both i and j
// (i != j). Throws ConfigError when t is outside [2, max cardinality].
SparseMat build_adjacency(const Hypergraph& h, int t);

// Builds the full bundle. Missing c_t for a cardinality present in h is
// treated as 0 with a warning appended to `warnings` when given.
LaplacianBundle build_laplacian(const Hypergraph& h,
                                const CardinalityWeights& weights,
                                std::vector<std::string>* warnings = nullptr);

// x'Lx for real x, or psi^H L psi for complex psi; both are real for
// symmetric PSD L. Throws ConfigError on dimension mismatch.
double quadratic_form(const SparseMat& L, const Eigen::VectorXd& x);
double quadratic_form(const SparseMat& L, const Eigen::VectorXcd& psi);

// Connected components of the simple graph with an edge wherever L has a
// nonzero off-diagonal entry. Sorted by size descending, ties by smallest
// contained node index. The union of components is all n nodes.
std::vector<std::vector<NodeId>> binarized_components(
    const Hypergraph& h, const CardinalityWeights& weights);
std::vector<std::vector<NodeId>> binarized_components(const SparseMat& L);

}  // namespace hyperembed
