#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hyperembed/laplacian.hpp"

namespace hyperembed {

// Eigenvalues ascending, columns of `vectors` the matching orthonormal
// eigenvectors. Sign convention: each eigenvector's largest-magnitude
// entry is positive (ties broken by lowest index), so results are
// deterministic across runs.
struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

// k smallest eigenpairs of a symmetric matrix via dense decomposition.
EigenSystem eig_smallest(const Eigen::MatrixXd& L, int k);
EigenSystem eig_smallest(const SparseMat& L, int k);

struct LinearEmbedding {
    Eigen::MatrixXd coords;                 // n x d, column k = eigenvector
    Eigen::VectorXd selected_eigenvalues;   // the d values, ascending
    std::vector<std::string> warnings;
};

struct PeriodicEmbedding {
    Eigen::VectorXd theta;  // phase angles in [-pi, pi]
    Eigen::Vector2d selected_eigenvalues;
    std::vector<std::string> warnings;
};

// Eigenvectors of the d smallest eigenvalues strictly greater than
// eig_floor, ascending. Requires the binarized graph to be connected
// (AssumptionError naming the component sizes otherwise) and at least d
// eigenvalues above the floor (NumericalError otherwise).
LinearEmbedding embed_linear(const LaplacianBundle& bundle, int d,
                             double eig_floor = 1e-9);

// theta_i = angle(v2_i + i*v3_i) from the eigenvectors of the two smallest
// eigenvalues above eig_floor; angle of a near-zero magnitude entry
// (< 1e-12) is set to 0 with a warning.
PeriodicEmbedding embed_periodic(const LaplacianBundle& bundle,
                                 double eig_floor = 1e-9);

}  // namespace hyperembed
