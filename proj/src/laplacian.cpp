#include "hyperembed/laplacian.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "hyperembed/errors.hpp"

namespace hyperembed {

SparseMat build_adjacency(const Hypergraph& h, int t) {
    if (t < 2 || t > h.max_cardinality())
        throw ConfigError("cardinality " + std::to_string(t) +
                          " out of range [2, " +
                          std::to_string(h.max_cardinality()) + "]");
    std::vector<Eigen::Triplet<double>> trips;
    for (const Edge& e : h.edges) {
        if (static_cast<int>(e.size()) != t) continue;
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                trips.emplace_back(e[a], e[b], 1.0);
                trips.emplace_back(e[b], e[a], 1.0);
            }
    }
    SparseMat W(h.n, h.n);
    W.setFromTriplets(trips.begin(), trips.end());  // duplicates summed
    return W;
}

LaplacianBundle build_laplacian(const Hypergraph& h,
                                const CardinalityWeights& weights,
                                std::vector<std::string>* warnings) {
    for (const auto& [t, w] : weights.c)
        if (w < 0.0)
            throw ConfigError("negative weight c_" + std::to_string(t));

    LaplacianBundle b;
    b.n = h.n;
    b.weights = weights;
    b.L = SparseMat(h.n, h.n);

    std::set<int> present;
    for (const Edge& e : h.edges) present.insert(static_cast<int>(e.size()));

    for (int t : present) {
        if (warnings && weights.c.find(t) == weights.c.end())
            warnings->push_back("no weight given for cardinality " +
                                std::to_string(t) + "; treating c_" +
                                std::to_string(t) + " = 0");
        SparseMat W = build_adjacency(h, t);
        Eigen::VectorXd deg = W * Eigen::VectorXd::Ones(h.n);
        SparseMat Lt = -W;
        for (int i = 0; i < h.n; ++i) Lt.coeffRef(i, i) += deg[i];
        b.L = b.L + weights.at(t) * Lt;
        b.W[t] = std::move(W);
        b.degree[t] = std::move(deg);
        b.Lt[t] = std::move(Lt);
    }
    b.L.prune(0.0);
    b.L.makeCompressed();
    return b;
}

double quadratic_form(const SparseMat& L, const Eigen::VectorXd& x) {
    if (x.size() != L.rows())
        throw ConfigError("quadratic form dimension mismatch");
    return x.dot(L * x);
}

double quadratic_form(const SparseMat& L, const Eigen::VectorXcd& psi) {
    if (psi.size() != L.rows())
        throw ConfigError("quadratic form dimension mismatch");
    return (psi.adjoint() * (L * psi)).value().real();
}

std::vector<std::vector<NodeId>> binarized_components(const SparseMat& L) {
    const int n = static_cast<int>(L.rows());
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (SparseMat::InnerIterator it(L, u); it; ++it) {
                int v = static_cast<int>(it.row());
                if (v == u || it.value() == 0.0) continue;
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    q.push(v);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<NodeId>> comps(ncomp);
    for (int v = 0; v < n; ++v) comps[comp[v]].push_back(v);
    std::sort(comps.begin(), comps.end(),
              [](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return comps;
}

std::vector<std::vector<NodeId>> binarized_components(
    const Hypergraph& h, const CardinalityWeights& weights) {
    return binarized_components(build_laplacian(h, weights).L);
}

}  // namespace hyperembed
