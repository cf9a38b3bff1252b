#include "hyperembed/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "hyperembed/errors.hpp"
#include "hyperembed/kernels.hpp"

namespace hyperembed {

std::string to_string(Geometry g) {
    return g == Geometry::linear ? "linear" : "periodic";
}

Geometry geometry_from_string(const std::string& s) {
    if (s == "linear") return Geometry::linear;
    if (s == "periodic") return Geometry::periodic;
    throw ConfigError("unknown geometry '" + s + "'");
}

Eigen::MatrixXd Positions::points() const {
    if (geometry == Geometry::linear) return coords;
    Eigen::MatrixXd p(theta.size(), 2);
    for (int i = 0; i < theta.size(); ++i) {
        p(i, 0) = std::cos(theta[i]);
        p(i, 1) = std::sin(theta[i]);
    }
    return p;
}

Positions linear_positions(Eigen::MatrixXd coords) {
    Positions p;
    p.geometry = Geometry::linear;
    p.coords = std::move(coords);
    return p;
}

Positions periodic_positions(Eigen::VectorXd theta) {
    Positions p;
    p.geometry = Geometry::periodic;
    p.theta = std::move(theta);
    return p;
}

namespace {

void check_tuple(int n, const Edge& R) {
    for (NodeId v : R)
        if (v < 0 || v >= n)
            throw ConfigError("tuple node " + std::to_string(v) +
                              " out of range");
}

}  // namespace

double incoherence_points(const Eigen::MatrixXd& points, const Edge& R) {
    double sum = 0.0;
    for (std::size_t a = 0; a < R.size(); ++a)
        for (std::size_t b = a + 1; b < R.size(); ++b)
            sum += (points.row(R[a]) - points.row(R[b])).squaredNorm();
    return 2.0 * sum;  // ordered-pair convention
}

double incoherence_linear(const Eigen::MatrixXd& coords, const Edge& R) {
    check_tuple(static_cast<int>(coords.rows()), R);
    return incoherence_points(coords, R);
}

double incoherence_periodic(const Eigen::VectorXd& theta, const Edge& R) {
    check_tuple(static_cast<int>(theta.size()), R);
    double sum = 0.0;
    for (std::size_t a = 0; a < R.size(); ++a)
        for (std::size_t b = a + 1; b < R.size(); ++b)
            sum += 2.0 - 2.0 * std::cos(theta[R[a]] - theta[R[b]]);
    return 2.0 * sum;
}

double incoherence(const Positions& pos, const Edge& R) {
    return pos.geometry == Geometry::linear
               ? incoherence_linear(pos.coords, R)
               : incoherence_periodic(pos.theta, R);
}

double edge_probability(const ModelSpec& model, const Positions& pos,
                        const Edge& R) {
    double z = model.gamma * model.weights.at(static_cast<int>(R.size())) *
               incoherence(pos, R);
    double e = std::exp(-z);
    return e / (1.0 + e);
}

void for_each_tuple(int n, int max_cardinality,
                    const std::function<void(const NodeId*, int)>& fn) {
    std::vector<NodeId> idx(std::max(max_cardinality, 0));
    for (int t = 2; t <= max_cardinality; ++t) {
        if (t > n) break;
        // lexicographic t-combinations of 0..n-1
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            fn(idx.data(), t);
            int pos = t - 1;
            while (pos >= 0 && idx[pos] == n - t + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
}

LikelihoodWorkspace::LikelihoodWorkspace(const Positions& pos,
                                         const CardinalityWeights& weights,
                                         const Hypergraph& h,
                                         int max_cardinality,
                                         std::vector<std::string>* warnings) {
    const int n = pos.n();
    if (n != h.n) throw ConfigError("positions/hypergraph size mismatch");
    if (max_cardinality < 2)
        throw ConfigError("tuple universe needs max cardinality >= 2");
    if (h.max_cardinality() > max_cardinality)
        throw ConfigError("hypergraph has edges outside the tuple universe");
    if (warnings && max_cardinality > 3 && n > 200)
        warnings->push_back("enumerating all tuples up to cardinality " +
                            std::to_string(max_cardinality) + " on " +
                            std::to_string(n) + " nodes is O(n^T)");

    const Eigen::MatrixXd points = pos.points();
    const int d = static_cast<int>(points.cols());

    std::size_t universe = 0;
    for (int t = 2; t <= std::min(max_cardinality, n); ++t) {
        // running count of C(n, t)
        double c = 1.0;
        for (int i = 0; i < t; ++i) c = c * (n - i) / (i + 1);
        universe += static_cast<std::size_t>(c + 0.5);
    }
    tuple_a_.reserve(universe);

    auto sqdist = [&](NodeId i, NodeId j) {
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
            double diff = points(i, k) - points(j, k);
            s += diff * diff;
        }
        return s;
    };

    // Specialized loops for the common dyadic/triadic universe.
    if (max_cardinality <= 3) {
        const double c2 = weights.at(2);
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j)
                tuple_a_.push_back(c2 * 2.0 * sqdist(i, j));
        if (max_cardinality == 3) {
            const double c3 = weights.at(3);
            for (NodeId i = 0; i < n; ++i)
                for (NodeId j = i + 1; j < n; ++j) {
                    const double sij = sqdist(i, j);
                    for (NodeId k = j + 1; k < n; ++k)
                        tuple_a_.push_back(
                            c3 * 2.0 * (sij + sqdist(i, k) + sqdist(j, k)));
                }
        }
    } else {
        for_each_tuple(n, max_cardinality, [&](const NodeId* idx, int t) {
            Edge R(idx, idx + t);
            tuple_a_.push_back(weights.at(t) * incoherence_points(points, R));
        });
    }

    edge_a_sum_ = 0.0;
    for (const Edge& e : h.edges)
        edge_a_sum_ += weights.at(static_cast<int>(e.size())) *
                       incoherence_points(points, e);
}

LikelihoodReport LikelihoodWorkspace::evaluate(double gamma) const {
    LikelihoodReport r;
    r.gamma_star = gamma;
    r.edge_term = -gamma * edge_a_sum_;
    r.null_term =
        -kern::softplus_neg_scaled_sum(tuple_a_.data(), tuple_a_.size(), gamma);
    r.log_likelihood = r.edge_term + r.null_term;
    r.evaluations = 1;
    return r;
}

double LikelihoodWorkspace::expected_edge_count(double gamma) const {
    double sum = 0.0;
    for (double a : tuple_a_) {
        double e = std::exp(-gamma * a);
        sum += e / (1.0 + e);
    }
    return sum;
}

LikelihoodReport log_likelihood(const ModelSpec& model, const Positions& pos,
                                const Hypergraph& h,
                                std::vector<std::string>* warnings) {
    LikelihoodWorkspace ws(pos, model.weights, h, model.max_cardinality,
                           warnings);
    return ws.evaluate(model.gamma);
}

LikelihoodReport fit_gamma(const LikelihoodWorkspace& ws,
                           std::pair<double, double> gamma_range,
                           int grid_points) {
    auto [lo, hi] = gamma_range;
    if (!(lo > 0.0 && lo < hi))
        throw ConfigError("gamma range must satisfy 0 < lo < hi");

    int evals = 0;
    double ll_min = std::numeric_limits<double>::infinity();
    double ll_max = -std::numeric_limits<double>::infinity();
    auto objective = [&](double u) {
        double ll = ws.evaluate(std::exp(u)).log_likelihood;
        ++evals;
        ll_min = std::min(ll_min, ll);
        ll_max = std::max(ll_max, ll);
        return ll;
    };

    double ulo = std::log(lo), uhi = std::log(hi);

    if (grid_points > 1) {
        int best = 0;
        double best_ll = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid_points; ++i) {
            double u = ulo + (uhi - ulo) * i / (grid_points - 1);
            double ll = objective(u);
            // Ties break toward larger gamma: a floating-point plateau at
            // the maximum (terms underflowing to 0) stands in for a
            // likelihood that is strictly increasing in exact arithmetic.
            if (ll >= best_ll) {
                best_ll = ll;
                best = i;
            }
        }
        double step = (uhi - ulo) / (grid_points - 1);
        double nlo = ulo + step * std::max(best - 1, 0);
        double nhi = ulo + step * std::min(best + 1, grid_points - 1);
        ulo = nlo;
        uhi = nhi;
    }

    // Golden-section maximization on log(gamma); the likelihood is concave
    // in gamma, hence unimodal on any subinterval.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = ulo, b = uhi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (b - a > 1e-6) {
        if (f1 <= f2) {  // ties move right; see the grid tie-break note
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = objective(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = objective(x1);
        }
    }
    double u_star = (a + b) / 2.0;
    double gamma_star = std::exp(u_star);

    LikelihoodReport r = ws.evaluate(gamma_star);
    r.evaluations = evals + 1;
    bool flat =
        ll_max - ll_min <= 1e-12 * std::max(1.0, std::abs(ll_max));
    r.gamma_at_boundary = flat ||
                          gamma_star <= gamma_range.first * 1.001 ||
                          gamma_star >= gamma_range.second / 1.001;
    return r;
}

LikelihoodReport fit_gamma(Geometry geometry,
                           const CardinalityWeights& weights,
                           const Positions& pos, const Hypergraph& h,
                           std::pair<double, double> gamma_range,
                           int grid_points) {
    if (pos.geometry != geometry)
        throw ConfigError("positions geometry does not match the model");
    int T = h.max_cardinality();
    for (const auto& [t, w] : weights.c)
        if (w > 0.0) T = std::max(T, t);
    LikelihoodWorkspace ws(pos, weights, h, T);
    return fit_gamma(ws, gamma_range, grid_points);
}

Hypergraph sample(const ModelSpec& model, const Positions& pos,
                  std::uint64_t seed) {
    const int n = pos.n();
    const Eigen::MatrixXd points = pos.points();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    Hypergraph h;
    h.n = n;
    for_each_tuple(n, model.max_cardinality, [&](const NodeId* idx, int t) {
        Edge R(idx, idx + t);
        double z = model.gamma * model.weights.at(t) *
                   incoherence_points(points, R);
        double e = std::exp(-z);
        double p = e / (1.0 + e);
        if (unif(rng) < p) h.edges.push_back(std::move(R));
    });
    return h;
}

ModelComparison compare_models(const Hypergraph& h,
                               const CardinalityWeights& weights,
                               double eig_floor,
                               std::pair<double, double> gamma_range,
                               int d_linear) {
    ModelComparison cmp;
    LaplacianBundle bundle = build_laplacian(h, weights, &cmp.warnings);
    cmp.linear_embedding = embed_linear(bundle, d_linear, eig_floor);
    cmp.periodic_embedding = embed_periodic(bundle, eig_floor);

    int T = h.max_cardinality();
    for (const auto& [t, w] : weights.c)
        if (w > 0.0) T = std::max(T, t);

    Positions lin = linear_positions(cmp.linear_embedding.coords);
    Positions per = periodic_positions(cmp.periodic_embedding.theta);
    LikelihoodWorkspace lin_ws(lin, weights, h, T, &cmp.warnings);
    LikelihoodWorkspace per_ws(per, weights, h, T, &cmp.warnings);
    cmp.linear = fit_gamma(lin_ws, gamma_range);
    cmp.periodic = fit_gamma(per_ws, gamma_range);
    cmp.winner = cmp.linear.log_likelihood >= cmp.periodic.log_likelihood
                     ? Geometry::linear
                     : Geometry::periodic;
    return cmp;
}

Positions discrete_sites(Geometry geometry, int n) {
    if (geometry == Geometry::linear) {
        Eigen::MatrixXd coords(n, 1);
        for (int i = 0; i < n; ++i) coords(i, 0) = i + 1;
        return linear_positions(coords);
    }
    Eigen::VectorXd theta(n);
    for (int i = 0; i < n; ++i) theta[i] = 2.0 * M_PI * i / n;
    return periodic_positions(theta);
}

double total_incoherence(const Hypergraph& h,
                         const CardinalityWeights& weights,
                         const Positions& pos) {
    const Eigen::MatrixXd points = pos.points();
    double sum = 0.0;
    for (const Edge& e : h.edges)
        sum += weights.at(static_cast<int>(e.size())) *
               incoherence_points(points, e);
    return sum;
}

AssignmentSearch brute_force_optimal_assignment(
    const Hypergraph& h, const CardinalityWeights& weights,
    Geometry geometry) {
    const int n = h.n;
    if (n > 9)
        throw ConfigError("brute-force assignment limited to n <= 9, got " +
                          std::to_string(n));
    const Eigen::MatrixXd sites = discrete_sites(geometry, n).points();
    const int d = static_cast<int>(sites.cols());

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    Eigen::MatrixXd placed(n, d);
    auto eta_of = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i) placed.row(i) = sites.row(p[i]);
        double eta = 0.0;
        for (const Edge& e : h.edges)
            eta += weights.at(static_cast<int>(e.size())) *
                   incoherence_points(placed, e);
        return eta;
    };

    // Two passes: find the minimum, then collect everything within a
    // relative tolerance of it, so near-ties cannot be dropped by a
    // drifting running minimum.
    AssignmentSearch out;
    out.min_incoherence = std::numeric_limits<double>::infinity();
    do {
        out.min_incoherence = std::min(out.min_incoherence, eta_of(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const double tol = 1e-9 * std::max(1.0, std::abs(out.min_incoherence));
    do {
        if (eta_of(perm) <= out.min_incoherence + tol)
            out.optimal_permutations.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace hyperembed
