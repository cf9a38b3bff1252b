#include "hyperembed/spectral.hpp"

#include <cmath>

#include "hyperembed/errors.hpp"

namespace hyperembed {

namespace {

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    int best = 0;
    double mag = -1.0;
    for (int i = 0; i < v.size(); ++i) {
        double m = std::abs(v[i]);
        if (m > mag) {
            mag = m;
            best = i;
        }
    }
    if (v[best] < 0.0) v = -v;
}

void require_connected(const LaplacianBundle& bundle) {
    auto comps = binarized_components(bundle.L);
    if (comps.size() <= 1) return;
    std::string sizes;
    for (const auto& c : comps) {
        if (!sizes.empty()) sizes += ", ";
        sizes += std::to_string(c.size());
    }
    throw AssumptionError("binarized Laplacian graph is disconnected (" +
                          std::to_string(comps.size()) +
                          " components of sizes " + sizes + ")");
}

// Full decomposition with the floor rule applied; returns selected columns.
struct Selection {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

Selection select_above_floor(const LaplacianBundle& bundle, int d,
                             double eig_floor,
                             std::vector<std::string>* warnings) {
    EigenSystem es = eig_smallest(bundle.L, bundle.n);
    std::vector<int> keep;
    for (int i = 0; i < es.values.size(); ++i)
        if (es.values[i] > eig_floor) keep.push_back(i);
    if (static_cast<int>(keep.size()) < d)
        throw NumericalError(
            "insufficient spectrum: " + std::to_string(keep.size()) +
            " eigenvalues above floor " + std::to_string(eig_floor) +
            ", need " + std::to_string(d));
    Selection sel;
    sel.values.resize(d);
    sel.vectors.resize(bundle.n, d);
    for (int k = 0; k < d; ++k) {
        sel.values[k] = es.values[keep[k]];
        sel.vectors.col(k) = es.vectors.col(keep[k]);
    }
    if (warnings && d >= 2 && std::abs(sel.values[1] - sel.values[0]) < 1e-9)
        warnings->push_back("near-degenerate leading eigenvalues; embedding "
                            "order is solver-dependent");
    return sel;
}

}  // namespace

EigenSystem eig_smallest(const Eigen::MatrixXd& L, int k) {
    const int n = static_cast<int>(L.rows());
    if (k < 1 || k > n) throw ConfigError("eigenpair count out of range");
    if (!L.isApprox(L.transpose(), 1e-12))
        throw ConfigError("eigendecomposition requires a symmetric matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
    if (solver.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver failed to converge");
    EigenSystem es;
    es.values = solver.eigenvalues().head(k);
    es.vectors = solver.eigenvectors().leftCols(k);
    for (int j = 0; j < k; ++j) fix_sign(es.vectors.col(j));
    return es;
}

EigenSystem eig_smallest(const SparseMat& L, int k) {
    return eig_smallest(Eigen::MatrixXd(L), k);
}

LinearEmbedding embed_linear(const LaplacianBundle& bundle, int d,
                             double eig_floor) {
    if (d < 1) throw ConfigError("embedding dimension must be >= 1");
    require_connected(bundle);
    LinearEmbedding emb;
    Selection sel = select_above_floor(bundle, d, eig_floor, &emb.warnings);
    emb.coords = std::move(sel.vectors);
    emb.selected_eigenvalues = std::move(sel.values);
    return emb;
}

PeriodicEmbedding embed_periodic(const LaplacianBundle& bundle,
                                 double eig_floor) {
    require_connected(bundle);
    PeriodicEmbedding emb;
    Selection sel;
    if (bundle.n == 2) {
        // Two nodes give only one eigenvalue above the floor; pad with a
        // zero second coordinate so the phases fall on the real axis.
        sel = select_above_floor(bundle, 1, eig_floor, &emb.warnings);
        sel.values.conservativeResize(2);
        sel.values[1] = sel.values[0];
        sel.vectors.conservativeResize(Eigen::NoChange, 2);
        sel.vectors.col(1).setZero();
        emb.warnings.push_back(
            "only one eigenvalue above the floor; phases restricted to the "
            "real axis");
    } else {
        sel = select_above_floor(bundle, 2, eig_floor, &emb.warnings);
    }
    emb.selected_eigenvalues = sel.values;
    emb.theta.resize(bundle.n);
    int degenerate = 0;
    for (int i = 0; i < bundle.n; ++i) {
        double re = sel.vectors(i, 0);
        double im = sel.vectors(i, 1);
        if (std::hypot(re, im) < 1e-12) {
            emb.theta[i] = 0.0;
            ++degenerate;
        } else {
            emb.theta[i] = std::atan2(im, re);
        }
    }
    if (degenerate > 0)
        emb.warnings.push_back(std::to_string(degenerate) +
                               " node(s) with near-zero eigenvector "
                               "magnitude; angle set to 0");
    return emb;
}

}  // namespace hyperembed
