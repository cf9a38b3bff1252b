#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperembed/hypergraph.hpp"
#include "hyperembed/model.hpp"
#include "hyperembed/predict.hpp"

namespace hyperembed {

// A parsed dataset: hypergraph plus node naming and optional class labels.
struct SimplexDataset {
    Hypergraph h;
    std::vector<std::string> node_names;  // original ids, index-aligned
    std::vector<int> labels;              // empty, or -1 where unlabeled
    std::string format;                   // "triple" or "edgelist"
    std::uint64_t content_hash = 0;       // FNV-1a over the input bytes
    std::size_t duplicates_dropped = 0;
    std::size_t invalid_dropped = 0;      // repeated-node simplices
    std::size_t oversize_dropped = 0;     // cardinality outside [2, T]
};

// Timestamped-simplex distribution format: one file with simplex sizes,
// one with flattened 1-based node ids, one with per-simplex timestamps.
// Simplices with repeated nodes and cardinalities outside [2, max_cardinality]
// are dropped and counted. max_cardinality <= 0 means no cap.
SimplexDataset read_simplex_triple_files(const std::string& nverts_path,
                                         const std::string& simplices_path,
                                         const std::string& times_path,
                                         int max_cardinality = 3);

// One hyperedge per line, whitespace/comma separated node names; blank
// lines and '#' comments skipped. Node names interned in first-seen order.
SimplexDataset read_edge_list(const std::string& path);

// "node label" pairs, aligned against the dataset's interned node names.
// Unlabeled nodes get -1 and are listed in `missing` when given.
void read_labels(const std::string& path, SimplexDataset& dataset,
                 std::vector<std::string>* missing = nullptr);

enum class ReportFormat { csv, json };
ReportFormat report_format_from_string(const std::string& s);

// 17 significant digits; round-trips any double exactly.
std::string format_double(double v);

// One row per (geometry, c3*) of a model-comparison sweep.
struct ComparisonRow {
    std::string geometry;
    double c3_star = 0.0;
    double gamma_star = 0.0;
    double log_likelihood = 0.0;
    bool gamma_at_boundary = false;
};

void write_comparison_report(const std::vector<ComparisonRow>& rows,
                             std::uint64_t content_hash,
                             const std::string& path, ReportFormat format);

void write_prediction_report(const PredictionReport& report,
                             std::uint64_t content_hash,
                             const std::string& path, ReportFormat format);

struct ClusterReport {
    std::string geometry;
    int k = 0;
    std::uint64_t seed = 0;
    double inertia = 0.0;
    double ari = 0.0;
    std::size_t labeled_nodes = 0;
    std::vector<int> labels;
};

void write_cluster_report(const ClusterReport& report,
                          std::uint64_t content_hash, const std::string& path,
                          ReportFormat format);

// Embedding as CSV: node name, then coordinates or the phase angle.
void write_embedding(const Positions& pos,
                     const std::vector<std::string>& node_names,
                     const std::string& path);

// Edge-list writer; inverse of read_edge_list. Timestamps, when present,
// are written as a trailing '@<time>' token that read_edge_list recognizes.
void write_edge_list(const Hypergraph& h,
                     const std::vector<std::string>& node_names,
                     const std::string& path);

std::uint64_t fnv1a_file(const std::string& path);

}  // namespace hyperembed
