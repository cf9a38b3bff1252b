#include "hyperembed/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hyperembed/errors.hpp"
#include "hyperembed/laplacian.hpp"

namespace hyperembed {

int Hypergraph::max_cardinality() const {
    std::size_t t = 2;
    for (const auto& e : edges) t = std::max(t, e.size());
    return static_cast<int>(t);
}

Hypergraph make_hypergraph(int n, std::vector<Edge> edges,
                           std::vector<double> timestamps,
                           std::size_t* duplicates_dropped) {
    if (n < 0) throw ConfigError("node count must be nonnegative");
    if (!timestamps.empty() && timestamps.size() != edges.size())
        throw ConfigError("timestamp count does not match edge count");

    Hypergraph h;
    h.n = n;
    std::set<Edge> seen;
    std::size_t dups = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge e = edges[i];
        if (e.size() < 2)
            throw ConfigError("hyperedge with fewer than 2 nodes");
        std::sort(e.begin(), e.end());
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= n)
                throw ConfigError("node index " + std::to_string(e[j]) +
                                  " out of range [0, " + std::to_string(n) + ")");
            if (j > 0 && e[j] == e[j - 1])
                throw ConfigError("repeated node " + std::to_string(e[j]) +
                                  " within a hyperedge");
        }
        if (!seen.insert(e).second) {
            ++dups;
            continue;
        }
        h.edges.push_back(std::move(e));
        if (!timestamps.empty()) h.timestamps.push_back(timestamps[i]);
    }
    if (duplicates_dropped) *duplicates_dropped = dups;
    return h;
}

void CardinalityWeights::validate() const {
    bool any_positive = false;
    for (const auto& [t, w] : c) {
        if (t < 2) throw ConfigError("cardinality weight for t < 2");
        if (w < 0.0)
            throw ConfigError("negative weight c_" + std::to_string(t));
        if (w > 0.0) any_positive = true;
    }
    if (!any_positive)
        throw ConfigError("all cardinality weights are zero or missing");
}

CardinalityWeights dyadic_triadic_weights(double c2, double c3) {
    CardinalityWeights w;
    w.c[2] = c2;
    w.c[3] = c3;
    return w;
}

RestrictedHypergraph restrict_to(const Hypergraph& h,
                                 const std::vector<NodeId>& nodes) {
    if (nodes.empty()) throw ConfigError("restriction to an empty node subset");
    std::vector<NodeId> keep = nodes;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.front() < 0 || keep.back() >= h.n)
        throw ConfigError("restriction subset contains out-of-range nodes");

    std::vector<NodeId> new_index(h.n, -1);
    for (std::size_t k = 0; k < keep.size(); ++k) new_index[keep[k]] = static_cast<NodeId>(k);

    RestrictedHypergraph out;
    out.h.n = static_cast<int>(keep.size());
    out.index_map = keep;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const Edge& e = h.edges[i];
        bool inside = std::all_of(e.begin(), e.end(),
                                  [&](NodeId v) { return new_index[v] >= 0; });
        if (!inside) continue;
        Edge mapped(e.size());
        for (std::size_t j = 0; j < e.size(); ++j) mapped[j] = new_index[e[j]];
        out.h.edges.push_back(std::move(mapped));
        if (h.has_timestamps()) out.h.timestamps.push_back(h.timestamps[i]);
    }
    return out;
}

RestrictedHypergraph trim_by_degree(const Hypergraph& h, double fraction) {
    if (!(fraction >= 0.0 && fraction < 0.5))
        throw ConfigError("trim fraction must be in [0, 0.5)");
    if (fraction == 0.0) {
        std::vector<NodeId> all(h.n);
        std::iota(all.begin(), all.end(), 0);
        return restrict_to(h, all);
    }

    // Unweighted degree: row sums of sum_t W^[t].
    std::vector<long long> degree(h.n, 0);
    for (const Edge& e : h.edges)
        for (NodeId v : e) degree[v] += static_cast<long long>(e.size()) - 1;

    auto k = static_cast<std::size_t>(std::ceil(fraction * h.n));
    std::vector<NodeId> order(h.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (degree[a] != degree[b]) return degree[a] < degree[b];
        return a < b;
    });

    std::vector<bool> removed(h.n, false);
    for (std::size_t i = 0; i < k && i < order.size(); ++i)
        removed[order[i]] = true;  // lowest degrees
    // Highest degrees, ties by index ascending: walk the descending-degree
    // order, which within equal degrees prefers larger indices, so re-sort
    // the tail block explicitly.
    {
        std::vector<NodeId> desc(order.rbegin(), order.rend());
        std::stable_sort(desc.begin(), desc.end(), [&](NodeId a, NodeId b) {
            if (degree[a] != degree[b]) return degree[a] > degree[b];
            return a < b;
        });
        for (std::size_t i = 0; i < k && i < desc.size(); ++i) removed[desc[i]] = true;
    }

    std::vector<NodeId> keep;
    for (NodeId v = 0; v < h.n; ++v)
        if (!removed[v]) keep.push_back(v);
    return restrict_to(h, keep);
}

}  // namespace hyperembed
