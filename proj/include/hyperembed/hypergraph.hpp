#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperembed {

using NodeId = int32_t;

// A hyperedge is a sorted list of distinct node indices, cardinality >= 2.
using Edge = std::vector<NodeId>;

// Undirected, unweighted hypergraph on nodes 0..n-1. Edges are unique
// node-sets; optional per-edge timestamps are kept aligned with `edges`.
struct Hypergraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<double> timestamps;  // empty, or one entry per edge

    bool has_timestamps() const { return !timestamps.empty(); }

    // Largest cardinality present; 2 if the edge list is empty.
    int max_cardinality() const;
};

// Builds a hypergraph from raw edges: sorts each edge, validates node
// ranges and distinctness, and drops duplicate node-sets (keeping the
// first occurrence and its timestamp). Throws ConfigError on invalid
// edges; reports the number of duplicates dropped if requested.
Hypergraph make_hypergraph(int n, std::vector<Edge> edges,
                           std::vector<double> timestamps = {},
                           std::size_t* duplicates_dropped = nullptr);

// Per-cardinality Laplacian weights c_t, t in [2, T]. Missing entries
// read as zero.
struct CardinalityWeights {
    std::map<int, double> c;

    double at(int t) const {
        auto it = c.find(t);
        return it == c.end() ? 0.0 : it->second;
    }

    // Throws ConfigError unless all weights are >= 0 and at least one is > 0.
    void validate() const;
};

// Convenience for the common dyadic+triadic case.
CardinalityWeights dyadic_triadic_weights(double c2, double c3);

// Keeps only hyperedges fully contained in `nodes` and reindexes the
// retained nodes densely, preserving ascending order. `index_map[new]`
// gives the original index.
struct RestrictedHypergraph {
    Hypergraph h;
    std::vector<NodeId> index_map;
};

RestrictedHypergraph restrict_to(const Hypergraph& h,
                                 const std::vector<NodeId>& nodes);

// Removes the ceil(fraction*n) highest- and lowest-degree nodes, with
// degree taken as row sums of the unweighted sum of all W^[t]. Degree
// ties are broken by node index ascending. fraction must be in [0, 0.5).
RestrictedHypergraph trim_by_degree(const Hypergraph& h, double fraction);

}  // namespace hyperembed
