#include "hyperembed/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hyperembed/errors.hpp"
#include <nlohmann/json.hpp>

namespace hyperembed {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<double> parse_number_file(const std::string& path) {
    std::string content = read_file(path);
    std::vector<double> values;
    std::istringstream in(content);
    std::string tok;
    std::size_t line = 1;
    // track line numbers token by token
    for (std::size_t pos = 0; pos < content.size();) {
        while (pos < content.size() && std::isspace(static_cast<unsigned char>(content[pos]))) {
            if (content[pos] == '\n') ++line;
            ++pos;
        }
        if (pos >= content.size()) break;
        std::size_t end = pos;
        while (end < content.size() && !std::isspace(static_cast<unsigned char>(content[end]))) ++end;
        std::string t = content.substr(pos, end - pos);
        try {
            std::size_t used = 0;
            double v = std::stod(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError(path + ":" + std::to_string(line) +
                              ": unparseable token '" + t + "'");
        }
        pos = end;
    }
    return values;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw ConfigError("write failed for " + path);
}

}  // namespace

std::uint64_t fnv1a_file(const std::string& path) {
    return fnv1a(read_file(path));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SimplexDataset read_simplex_triple_files(const std::string& nverts_path,
                                         const std::string& simplices_path,
                                         const std::string& times_path,
                                         int max_cardinality) {
    std::vector<double> nverts = parse_number_file(nverts_path);
    std::vector<double> flat = parse_number_file(simplices_path);
    std::vector<double> times = parse_number_file(times_path);

    std::size_t expected = 0;
    for (double v : nverts) expected += static_cast<std::size_t>(v);
    if (expected != flat.size())
        throw ConfigError("simplex sizes sum to " + std::to_string(expected) +
                          " but the simplices file has " +
                          std::to_string(flat.size()) + " node entries");
    if (times.size() != nverts.size())
        throw ConfigError("timestamp count " + std::to_string(times.size()) +
                          " does not match simplex count " +
                          std::to_string(nverts.size()));

    SimplexDataset ds;
    ds.format = "triple";
    ds.content_hash = fnv1a(read_file(simplices_path),
                            fnv1a(read_file(nverts_path)));
    ds.content_hash = fnv1a(read_file(times_path), ds.content_hash);

    // 1-based ids in the files map to dense 0-based indices in id order.
    std::map<long long, NodeId> intern;
    std::vector<Edge> edges;
    std::vector<double> timestamps;
    std::size_t cursor = 0;
    for (std::size_t s = 0; s < nverts.size(); ++s) {
        auto size = static_cast<std::size_t>(nverts[s]);
        std::vector<long long> raw(size);
        for (std::size_t j = 0; j < size; ++j)
            raw[j] = static_cast<long long>(flat[cursor + j]);
        cursor += size;

        if (max_cardinality > 0 &&
            (size < 2 || static_cast<int>(size) > max_cardinality)) {
            ++ds.oversize_dropped;
            continue;
        }
        if (size < 2) {
            ++ds.oversize_dropped;
            continue;
        }
        std::set<long long> uniq(raw.begin(), raw.end());
        if (uniq.size() != raw.size()) {
            ++ds.invalid_dropped;
            continue;
        }
        Edge e;
        for (long long id : raw) {
            auto [it, fresh] = intern.emplace(id, static_cast<NodeId>(intern.size()));
            e.push_back(it->second);
        }
        edges.push_back(std::move(e));
        timestamps.push_back(times[s]);
    }

    ds.node_names.resize(intern.size());
    for (const auto& [id, idx] : intern)
        ds.node_names[idx] = std::to_string(id);
    ds.h = make_hypergraph(static_cast<int>(intern.size()), std::move(edges),
                           std::move(timestamps), &ds.duplicates_dropped);
    return ds;
}

SimplexDataset read_edge_list(const std::string& path) {
    std::string content = read_file(path);

    SimplexDataset ds;
    ds.format = "edgelist";
    ds.content_hash = fnv1a(content);

    std::map<std::string, NodeId> intern;
    std::vector<Edge> edges;
    std::vector<double> timestamps;
    bool any_timestamp = false;

    std::istringstream in(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;

        double ts = 0.0;
        bool has_ts = false;
        if (tokens.back().size() > 1 && tokens.back()[0] == '@') {
            try {
                ts = std::stod(tokens.back().substr(1));
            } catch (const std::exception&) {
                throw ConfigError(path + ":" + std::to_string(lineno) +
                                  ": bad timestamp token '" + tokens.back() + "'");
            }
            has_ts = true;
            tokens.pop_back();
        }
        if (tokens.size() < 2)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": hyperedge needs at least 2 nodes");
        std::set<std::string> uniq(tokens.begin(), tokens.end());
        if (uniq.size() != tokens.size())
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": repeated node within a hyperedge");

        Edge e;
        for (const std::string& name : tokens) {
            auto [it, fresh] = intern.emplace(name, static_cast<NodeId>(intern.size()));
            e.push_back(it->second);
        }
        edges.push_back(std::move(e));
        timestamps.push_back(ts);
        any_timestamp = any_timestamp || has_ts;
    }

    if (!any_timestamp) timestamps.clear();
    ds.node_names.resize(intern.size());
    for (const auto& [name, idx] : intern) ds.node_names[idx] = name;
    ds.h = make_hypergraph(static_cast<int>(intern.size()), std::move(edges),
                           std::move(timestamps), &ds.duplicates_dropped);
    return ds;
}

void read_labels(const std::string& path, SimplexDataset& dataset,
                 std::vector<std::string>* missing) {
    std::string content = read_file(path);
    dataset.content_hash = fnv1a(content, dataset.content_hash);

    std::map<std::string, NodeId> index;
    for (std::size_t i = 0; i < dataset.node_names.size(); ++i)
        index[dataset.node_names[i]] = static_cast<NodeId>(i);

    std::map<std::string, int> classes;
    std::vector<int> labels(dataset.node_names.size(), -1);
    std::vector<bool> seen(dataset.node_names.size(), false);

    std::istringstream in(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string node, label;
        if (!(ls >> node)) continue;
        if (!(ls >> label))
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'node label'");
        auto it = index.find(node);
        if (it == index.end())
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": unknown node '" + node + "'");
        if (seen[it->second])
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": duplicate label for node '" + node + "'");
        seen[it->second] = true;
        auto [cit, fresh] = classes.emplace(label, static_cast<int>(classes.size()));
        labels[it->second] = cit->second;
    }
    if (missing)
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] < 0) missing->push_back(dataset.node_names[i]);
    dataset.labels = std::move(labels);
}

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw ConfigError("unknown report format '" + s + "'");
}

void write_comparison_report(const std::vector<ComparisonRow>& rows,
                             std::uint64_t content_hash,
                             const std::string& path, ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::string out =
            "geometry,c3_star,gamma_star,log_likelihood,gamma_at_boundary\n";
        for (const auto& r : rows)
            out += r.geometry + "," + format_double(r.c3_star) + "," +
                   format_double(r.gamma_star) + "," +
                   format_double(r.log_likelihood) + "," +
                   (r.gamma_at_boundary ? "1" : "0") + "\n";
        write_file(path, out);
        return;
    }
    nlohmann::ordered_json j;
    j["input_hash"] = content_hash;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["geometry"] = r.geometry;
        row["c3_star"] = format_double(r.c3_star);
        row["gamma_star"] = format_double(r.gamma_star);
        row["log_likelihood"] = format_double(r.log_likelihood);
        row["gamma_at_boundary"] = r.gamma_at_boundary;
        j["rows"].push_back(row);
    }
    write_file(path, j.dump(2) + "\n");
}

void write_prediction_report(const PredictionReport& report,
                             std::uint64_t content_hash,
                             const std::string& path, ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::string out = "method,auc_pr\n";
        for (const auto& m : report.methods)
            out += m.method + "," + format_double(m.auc_pr) + "\n";
        write_file(path, out);
        return;
    }
    nlohmann::ordered_json j;
    j["input_hash"] = content_hash;
    j["train_fraction"] = format_double(report.train_fraction);
    j["split_mode"] = report.split_mode;
    j["seed"] = report.seed;
    j["split_attempts"] = report.split_attempts;
    j["lcc_nodes"] = report.lcc_nodes;
    j["train_edges"] = report.train_edges;
    j["test_edges"] = report.test_edges;
    j["candidates"] = report.candidates;
    j["positives"] = report.positives;
    j["base_rate"] = format_double(report.base_rate);
    j["c3_star"] = format_double(report.c3_star);
    j["gamma_star"] = format_double(report.gamma_star);
    j["methods"] = nlohmann::ordered_json::array();
    for (const auto& m : report.methods) {
        nlohmann::ordered_json row;
        row["method"] = m.method;
        row["auc_pr"] = format_double(m.auc_pr);
        j["methods"].push_back(row);
    }
    write_file(path, j.dump(2) + "\n");
}

void write_cluster_report(const ClusterReport& report,
                          std::uint64_t content_hash, const std::string& path,
                          ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::string out = "geometry,k,seed,inertia,ari,labeled_nodes\n";
        out += report.geometry + "," + std::to_string(report.k) + "," +
               std::to_string(report.seed) + "," +
               format_double(report.inertia) + "," + format_double(report.ari) +
               "," + std::to_string(report.labeled_nodes) + "\n";
        write_file(path, out);
        return;
    }
    nlohmann::ordered_json j;
    j["input_hash"] = content_hash;
    j["geometry"] = report.geometry;
    j["k"] = report.k;
    j["seed"] = report.seed;
    j["inertia"] = format_double(report.inertia);
    j["ari"] = format_double(report.ari);
    j["labeled_nodes"] = report.labeled_nodes;
    j["labels"] = report.labels;
    write_file(path, j.dump(2) + "\n");
}

void write_embedding(const Positions& pos,
                     const std::vector<std::string>& node_names,
                     const std::string& path) {
    std::string out;
    if (pos.geometry == Geometry::linear) {
        out = "node";
        for (int k = 0; k < pos.coords.cols(); ++k)
            out += ",x" + std::to_string(k + 1);
        out += "\n";
        for (int i = 0; i < pos.coords.rows(); ++i) {
            out += node_names.empty() ? std::to_string(i) : node_names[i];
            for (int k = 0; k < pos.coords.cols(); ++k)
                out += "," + format_double(pos.coords(i, k));
            out += "\n";
        }
    } else {
        out = "node,theta\n";
        for (int i = 0; i < pos.theta.size(); ++i) {
            out += (node_names.empty() ? std::to_string(i) : node_names[i]) +
                   "," + format_double(pos.theta[i]) + "\n";
        }
    }
    write_file(path, out);
}

void write_edge_list(const Hypergraph& h,
                     const std::vector<std::string>& node_names,
                     const std::string& path) {
    std::string out;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const Edge& e = h.edges[i];
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j > 0) out += " ";
            out += node_names.empty() ? std::to_string(e[j]) : node_names[e[j]];
        }
        if (h.has_timestamps()) out += " @" + format_double(h.timestamps[i]);
        out += "\n";
    }
    write_file(path, out);
}

}  // namespace hyperembed
