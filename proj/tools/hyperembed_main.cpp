// Command-line front end: embed, compare, cluster, predict, synth.
//
// Exit codes: 0 success, 2 parse/config error, 3 assumption violation
// (disconnected binarized graph), 4 numerical failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hyperembed/errors.hpp"
#include "hyperembed/io.hpp"
#include "hyperembed/metrics.hpp"
#include "hyperembed/model.hpp"
#include "hyperembed/predict.hpp"
#include "hyperembed/spectral.hpp"
#include "hyperembed/synth.hpp"

namespace he = hyperembed;

namespace {

struct CommonInput {
    std::string input;
    std::string format = "edgelist";
};

he::SimplexDataset load(const CommonInput& in, int max_cardinality = 3) {
    if (in.format == "edgelist") return he::read_edge_list(in.input);
    if (in.format == "triple")
        // --input is the shared path prefix of the three distribution files.
        return he::read_simplex_triple_files(in.input + "-nverts.txt",
                                             in.input + "-simplices.txt",
                                             in.input + "-times.txt",
                                             max_cardinality);
    throw he::ConfigError("unknown input format '" + in.format + "'");
}

he::ReportFormat pick_format(const std::string& flag, const std::string& out) {
    if (flag != "auto") return he::report_format_from_string(flag);
    if (out.size() >= 5 && out.substr(out.size() - 5) == ".json")
        return he::ReportFormat::json;
    return he::ReportFormat::csv;
}

void parse_range(const std::string& s, double& lo, double& hi) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw he::ConfigError("expected lo:hi, got '" + s + "'");
    try {
        lo = std::stod(s.substr(0, colon));
        hi = std::stod(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw he::ConfigError("bad range '" + s + "'");
    }
}

std::vector<double> parse_grid(const std::string& s) {
    auto c1 = s.find(':');
    auto c2 = s.find(':', c1 == std::string::npos ? s.size() : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw he::ConfigError("expected lo:hi:step, got '" + s + "'");
    double lo, hi, step;
    try {
        lo = std::stod(s.substr(0, c1));
        hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
        step = std::stod(s.substr(c2 + 1));
    } catch (const std::exception&) {
        throw he::ConfigError("bad grid '" + s + "'");
    }
    if (step <= 0.0 || hi < lo) throw he::ConfigError("bad grid '" + s + "'");
    std::vector<double> grid;
    for (double v = lo; v <= hi + step * 1e-9; v += step) grid.push_back(v);
    return grid;
}

void emit_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"range-dependent hypergraph embedding and model comparison"};
    app.require_subcommand(1);

    // embed
    CommonInput emb_in;
    std::string emb_geometry = "linear", emb_out;
    double emb_c3 = 1.0 / 3.0, emb_floor = 1e-9;
    int emb_dims = 1;
    auto* embed_cmd = app.add_subcommand("embed", "spectral node embedding");
    embed_cmd->add_option("--input", emb_in.input)->required();
    embed_cmd->add_option("--format", emb_in.format);
    embed_cmd->add_option("--geometry", emb_geometry)->required();
    embed_cmd->add_option("--c3", emb_c3)->required();
    embed_cmd->add_option("--dims", emb_dims);
    embed_cmd->add_option("--eig-floor", emb_floor);
    embed_cmd->add_option("--out", emb_out)->required();

    // compare
    CommonInput cmp_in;
    std::string cmp_grid = "0:1.5:0.1", cmp_range = "1e-3:1e4", cmp_out;
    std::string cmp_fmt = "auto";
    double cmp_floor = 1e-9;
    int cmp_dims = 1;
    auto* compare_cmd =
        app.add_subcommand("compare", "linear vs periodic model comparison");
    compare_cmd->add_option("--input", cmp_in.input)->required();
    compare_cmd->add_option("--format", cmp_in.format);
    compare_cmd->add_option("--c3-grid", cmp_grid);
    compare_cmd->add_option("--gamma-range", cmp_range);
    compare_cmd->add_option("--eig-floor", cmp_floor);
    compare_cmd->add_option("--dims", cmp_dims);
    compare_cmd->add_option("--report-format", cmp_fmt);
    compare_cmd->add_option("--out", cmp_out)->required();

    // cluster
    CommonInput clu_in;
    std::string clu_labels, clu_geometry = "linear", clu_out;
    std::string clu_fmt = "auto";
    double clu_c3 = 1.0 / 3.0, clu_floor = 1e-9;
    int clu_k = 2, clu_dims = 1;
    std::uint64_t clu_seed = 0;
    auto* cluster_cmd =
        app.add_subcommand("cluster", "k-means on an embedding, reports ARI");
    cluster_cmd->add_option("--input", clu_in.input)->required();
    cluster_cmd->add_option("--format", clu_in.format);
    cluster_cmd->add_option("--labels", clu_labels)->required();
    cluster_cmd->add_option("--geometry", clu_geometry)->required();
    cluster_cmd->add_option("--c3", clu_c3);
    cluster_cmd->add_option("--dims", clu_dims);
    cluster_cmd->add_option("--eig-floor", clu_floor);
    cluster_cmd->add_option("--k", clu_k)->required();
    cluster_cmd->add_option("--seed", clu_seed);
    cluster_cmd->add_option("--report-format", clu_fmt);
    cluster_cmd->add_option("--out", clu_out)->required();

    // predict
    CommonInput prd_in;
    std::string prd_split = "time", prd_out, prd_fmt = "auto";
    double prd_frac = 0.8, prd_floor = 0.01;
    int prd_dims = 3;
    std::uint64_t prd_seed = 0;
    auto* predict_cmd =
        app.add_subcommand("predict", "triadic hyperedge prediction");
    predict_cmd->add_option("--input", prd_in.input)->required();
    predict_cmd->add_option("--format", prd_in.format);
    predict_cmd->add_option("--train-frac", prd_frac)->required();
    predict_cmd->add_option("--split", prd_split);
    predict_cmd->add_option("--dims", prd_dims);
    predict_cmd->add_option("--eig-floor", prd_floor);
    predict_cmd->add_option("--seed", prd_seed);
    predict_cmd->add_option("--report-format", prd_fmt);
    predict_cmd->add_option("--out", prd_out)->required();

    // synth
    std::string syn_geometry = "linear", syn_out, syn_labels_out;
    double syn_gamma0 = 1.0, syn_a = 0.05, syn_c3 = 1.0 / 3.0;
    int syn_k = 5, syn_m = 50;
    std::uint64_t syn_seed = 0;
    auto* synth_cmd =
        app.add_subcommand("synth", "clustered synthetic hypergraph generator");
    synth_cmd->add_option("--geometry", syn_geometry)->required();
    synth_cmd->add_option("--k", syn_k)->required();
    synth_cmd->add_option("--m", syn_m)->required();
    synth_cmd->add_option("--gamma0", syn_gamma0)->required();
    synth_cmd->add_option("--a", syn_a)->required();
    synth_cmd->add_option("--c3", syn_c3)->required();
    synth_cmd->add_option("--seed", syn_seed)->required();
    synth_cmd->add_option("--labels-out", syn_labels_out);
    synth_cmd->add_option("--out", syn_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (embed_cmd->parsed()) {
        he::SimplexDataset ds = load(emb_in);
        auto weights = he::dyadic_triadic_weights(1.0, emb_c3);
        std::vector<std::string> warnings;
        auto bundle = he::build_laplacian(ds.h, weights, &warnings);
        he::Positions pos;
        if (emb_geometry == "linear") {
            auto emb = he::embed_linear(bundle, emb_dims, emb_floor);
            warnings.insert(warnings.end(), emb.warnings.begin(),
                            emb.warnings.end());
            pos = he::linear_positions(emb.coords);
        } else if (emb_geometry == "periodic") {
            auto emb = he::embed_periodic(bundle, emb_floor);
            warnings.insert(warnings.end(), emb.warnings.begin(),
                            emb.warnings.end());
            pos = he::periodic_positions(emb.theta);
        } else {
            throw he::ConfigError("unknown geometry '" + emb_geometry + "'");
        }
        emit_warnings(warnings);
        he::write_embedding(pos, ds.node_names, emb_out);
        return 0;
    }

    if (compare_cmd->parsed()) {
        he::SimplexDataset ds = load(cmp_in);
        double glo, ghi;
        parse_range(cmp_range, glo, ghi);
        std::vector<he::ComparisonRow> rows;
        for (double c3 : parse_grid(cmp_grid)) {
            auto weights = he::dyadic_triadic_weights(1.0, c3);
            auto cmp = he::compare_models(ds.h, weights, cmp_floor,
                                          {glo, ghi}, cmp_dims);
            emit_warnings(cmp.warnings);
            rows.push_back({"linear", c3, cmp.linear.gamma_star,
                            cmp.linear.log_likelihood,
                            cmp.linear.gamma_at_boundary});
            rows.push_back({"periodic", c3, cmp.periodic.gamma_star,
                            cmp.periodic.log_likelihood,
                            cmp.periodic.gamma_at_boundary});
        }
        he::write_comparison_report(rows, ds.content_hash, cmp_out,
                                    pick_format(cmp_fmt, cmp_out));
        return 0;
    }

    if (cluster_cmd->parsed()) {
        he::SimplexDataset ds = load(clu_in);
        std::vector<std::string> missing;
        he::read_labels(clu_labels, ds, &missing);
        if (!missing.empty())
            std::cerr << "warning: " << missing.size()
                      << " node(s) without labels; ARI uses the labeled "
                         "subset\n";

        auto weights = he::dyadic_triadic_weights(1.0, clu_c3);
        std::vector<std::string> warnings;
        auto bundle = he::build_laplacian(ds.h, weights, &warnings);
        Eigen::MatrixXd points;
        std::string geom = clu_geometry;
        if (geom == "linear") {
            auto emb = he::embed_linear(bundle, clu_dims, clu_floor);
            points = emb.coords;
        } else if (geom == "periodic") {
            auto emb = he::embed_periodic(bundle, clu_floor);
            points = he::periodic_positions(emb.theta).points();
        } else {
            throw he::ConfigError("unknown geometry '" + geom + "'");
        }
        emit_warnings(warnings);

        auto clustering = he::kmeans(points, clu_k, clu_seed);
        std::vector<int> pred, truth;
        for (std::size_t i = 0; i < ds.labels.size(); ++i)
            if (ds.labels[i] >= 0) {
                pred.push_back(clustering.labels[i]);
                truth.push_back(ds.labels[i]);
            }
        he::ClusterReport report;
        report.geometry = geom;
        report.k = clu_k;
        report.seed = clu_seed;
        report.inertia = clustering.inertia;
        report.ari = he::ari(pred, truth);
        report.labeled_nodes = pred.size();
        report.labels = clustering.labels;
        he::write_cluster_report(report, ds.content_hash, clu_out,
                                 pick_format(clu_fmt, clu_out));
        return 0;
    }

    if (predict_cmd->parsed()) {
        he::SimplexDataset ds = load(prd_in);
        he::SplitSpec spec;
        spec.train_fraction = prd_frac;
        spec.seed = prd_seed;
        if (prd_split == "time")
            spec.mode = he::SplitMode::by_timestamp;
        else if (prd_split == "random")
            spec.mode = he::SplitMode::random_edges;
        else
            throw he::ConfigError("unknown split mode '" + prd_split + "'");

        he::PredictionConfig config;
        config.dims = prd_dims;
        config.eig_floor = prd_floor;
        config.seed = prd_seed;
        auto report = he::run_prediction(ds.h, spec, config);
        he::write_prediction_report(report, ds.content_hash, prd_out,
                                    pick_format(prd_fmt, prd_out));
        return 0;
    }

    if (synth_cmd->parsed()) {
        he::ClusterPlan plan;
        plan.geometry = he::geometry_from_string(syn_geometry);
        plan.K = syn_k;
        plan.m = syn_m;
        plan.gamma0 = syn_gamma0;
        plan.a = syn_a;
        plan.weights = he::dyadic_triadic_weights(1.0, syn_c3);
        plan.seed = syn_seed;
        auto result = he::generate_until_connected(plan);
        if (result.attempts > 1)
            std::cerr << "note: " << result.attempts
                      << " attempts until connected\n";
        he::write_edge_list(result.h, {}, syn_out);
        if (!syn_labels_out.empty()) {
            std::string out;
            for (std::size_t i = 0; i < result.labels.size(); ++i)
                out += std::to_string(i) + " " +
                       std::to_string(result.labels[i]) + "\n";
            std::ofstream f(syn_labels_out, std::ios::binary | std::ios::trunc);
            f << out;
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const he::AssumptionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const he::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const he::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
