#include "hyperembed/predict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "hyperembed/errors.hpp"
#include "hyperembed/kernels.hpp"

namespace hyperembed {

namespace {

CardinalityWeights connectivity_weights(const Hypergraph& h) {
    // Unit weight for every present cardinality, so the LCC node set does
    // not depend on the c3* grid point under evaluation.
    CardinalityWeights w;
    w.c[2] = 1.0;
    for (const Edge& e : h.edges) w.c[static_cast<int>(e.size())] = 1.0;
    return w;
}

Hypergraph take_edges(const Hypergraph& h, const std::vector<std::size_t>& idx,
                      std::size_t begin, std::size_t end) {
    Hypergraph out;
    out.n = h.n;
    for (std::size_t k = begin; k < end; ++k) {
        out.edges.push_back(h.edges[idx[k]]);
        if (h.has_timestamps()) out.timestamps.push_back(h.timestamps[idx[k]]);
    }
    return out;
}

}  // namespace

TrainTestSplit split(const Hypergraph& h, const SplitSpec& spec,
                     const CardinalityWeights& weights) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw ConfigError("train fraction must be in (0, 1)");
    const std::size_t m = h.edges.size();
    const auto k = static_cast<std::size_t>(spec.train_fraction * m);

    if (spec.mode == SplitMode::by_timestamp) {
        if (!h.has_timestamps())
            throw ConfigError("timestamp split requested on untimestamped data");
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return h.timestamps[a] < h.timestamps[b];
                         });
        TrainTestSplit out;
        out.train = take_edges(h, order, 0, k);
        out.test = take_edges(h, order, k, m);
        return out;
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<std::size_t> order(m);
    for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        TrainTestSplit out;
        out.train = take_edges(h, order, 0, k);
        out.test = take_edges(h, order, k, m);
        out.attempts = attempt;
        if (binarized_components(out.train, weights).size() == 1) return out;
    }
    throw NumericalError("no connected training split found in " +
                         std::to_string(spec.max_attempts) + " attempts");
}

std::vector<Triple> candidate_triples(const Hypergraph& train) {
    const int n = train.n;
    if (n < 3) throw ConfigError("candidate enumeration needs >= 3 nodes");
    std::set<Triple> known;
    for (const Edge& e : train.edges)
        if (e.size() == 3) known.insert({e[0], e[1], e[2]});

    std::vector<Triple> out;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            for (NodeId k = j + 1; k < n; ++k) {
                Triple t{i, j, k};
                if (!known.count(t)) out.push_back(t);
            }
    return out;
}

std::vector<bool> positive_labels(const std::vector<Triple>& candidates,
                                  const Hypergraph& test) {
    std::set<Triple> pos;
    for (const Edge& e : test.edges)
        if (e.size() == 3) pos.insert({e[0], e[1], e[2]});
    std::vector<bool> out(candidates.size(), false);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        out[i] = pos.count(candidates[i]) > 0;
    return out;
}

std::vector<double> PredictionConfig::default_c3_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 15; ++i) g.push_back(0.1 * i);
    return g;
}

LinearModelFit fit_linear_model(const Hypergraph& train,
                                const PredictionConfig& config) {
    std::vector<double> grid =
        config.c3_grid.empty() ? PredictionConfig::default_c3_grid()
                               : config.c3_grid;
    const int T = std::max(3, train.max_cardinality());

    LinearModelFit best;
    best.train_log_likelihood = -std::numeric_limits<double>::infinity();
    bool any = false;
    std::string last_error;
    for (double c3 : grid) {
        CardinalityWeights w = dyadic_triadic_weights(1.0, c3);
        try {
            LaplacianBundle bundle = build_laplacian(train, w);
            LinearEmbedding emb =
                embed_linear(bundle, config.dims, config.eig_floor);
            Positions pos = linear_positions(emb.coords);
            LikelihoodWorkspace ws(pos, w, train, T);
            LikelihoodReport fit =
                fit_gamma(ws, config.gamma_range, config.gamma_grid_points);
            if (fit.log_likelihood > best.train_log_likelihood) {
                best.c3_star = c3;
                best.gamma_star = fit.gamma_star;
                best.train_log_likelihood = fit.log_likelihood;
                best.coords = emb.coords;
                any = true;
            }
        } catch (const Error& e) {
            // Grid points can fail (disconnected at c3*=0, thin spectrum);
            // they simply drop out of the search.
            last_error = e.what();
        }
    }
    if (!any)
        throw NumericalError("no feasible c3* grid point: " + last_error);
    return best;
}

std::vector<double> score_linear_model(const LinearModelFit& fit,
                                       const std::vector<Triple>& candidates) {
    std::vector<double> a(candidates.size());
    const Eigen::MatrixXd& x = fit.coords;
    const int d = static_cast<int>(x.cols());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const Triple& t = candidates[c];
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
            double dij = x(t[0], k) - x(t[1], k);
            double dik = x(t[0], k) - x(t[2], k);
            double djk = x(t[1], k) - x(t[2], k);
            s += dij * dij + dik * dik + djk * djk;
        }
        a[c] = fit.c3_star * 2.0 * s;
    }
    std::vector<double> scores(candidates.size());
    kern::logistic_neg_scaled(a.data(), a.size(), fit.gamma_star,
                              scores.data());
    return scores;
}

MeanScores score_means(const Hypergraph& train,
                       const std::vector<Triple>& candidates) {
    Eigen::MatrixXd W2 = Eigen::MatrixXd::Zero(train.n, train.n);
    for (const Edge& e : train.edges)
        if (e.size() == 2) {
            W2(e[0], e[1]) += 1.0;
            W2(e[1], e[0]) += 1.0;
        }

    MeanScores out;
    out.arithmetic.resize(candidates.size());
    out.geometric.resize(candidates.size());
    out.harmonic.resize(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const Triple& t = candidates[c];
        double w1 = W2(t[0], t[1]);
        double w2 = W2(t[0], t[2]);
        double w3 = W2(t[1], t[2]);
        out.arithmetic[c] = (w1 + w2 + w3) / 3.0;
        if (w1 == 0.0 || w2 == 0.0 || w3 == 0.0) {
            out.geometric[c] = 0.0;
            out.harmonic[c] = 0.0;
        } else {
            out.geometric[c] = std::cbrt(w1 * w2 * w3);
            out.harmonic[c] = 3.0 / (1.0 / w1 + 1.0 / w2 + 1.0 / w3);
        }
    }
    return out;
}

PredictionReport run_prediction(const Hypergraph& h, const SplitSpec& spec,
                                const PredictionConfig& config) {
    const CardinalityWeights conn = connectivity_weights(h);
    TrainTestSplit parts = split(h, spec, conn);

    auto comps = binarized_components(parts.train, conn);
    const std::vector<NodeId>& lcc = comps.front();
    RestrictedHypergraph train = restrict_to(parts.train, lcc);
    RestrictedHypergraph test = restrict_to(parts.test, lcc);

    std::vector<Triple> candidates = candidate_triples(train.h);
    std::vector<bool> positives = positive_labels(candidates, test.h);

    LinearModelFit fit = fit_linear_model(train.h, config);
    std::vector<double> linear_scores = score_linear_model(fit, candidates);
    MeanScores means = score_means(train.h, candidates);

    std::vector<double> random_scores(candidates.size());
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (double& s : random_scores) s = unif(rng);

    PredictionReport report;
    report.train_fraction = spec.train_fraction;
    report.split_mode =
        spec.mode == SplitMode::by_timestamp ? "time" : "random";
    report.seed = config.seed;
    report.split_attempts = parts.attempts;
    report.lcc_nodes = lcc.size();
    report.train_edges = train.h.edges.size();
    report.test_edges = test.h.edges.size();
    report.candidates = candidates.size();
    std::size_t npos = 0;
    for (bool b : positives) npos += b ? 1 : 0;
    report.positives = npos;
    report.base_rate = candidates.empty()
                           ? 0.0
                           : static_cast<double>(npos) / candidates.size();
    report.c3_star = fit.c3_star;
    report.gamma_star = fit.gamma_star;

    auto evaluate = [&](const std::string& name,
                        const std::vector<double>& scores,
                        std::uint64_t tie_seed) {
        std::vector<std::pair<double, bool>> scored(scores.size());
        for (std::size_t i = 0; i < scores.size(); ++i)
            scored[i] = {scores[i], static_cast<bool>(positives[i])};
        report.methods.push_back({name, auc_pr(scored, tie_seed).auc});
    };
    evaluate("random", random_scores, config.seed + 1);
    evaluate("linear-model", linear_scores, config.seed + 2);
    evaluate("arithmetic", means.arithmetic, config.seed + 3);
    evaluate("geometric", means.geometric, config.seed + 4);
    evaluate("harmonic", means.harmonic, config.seed + 5);
    return report;
}

}  // namespace hyperembed
