#include "hyperembed/synth.hpp"

#include <cmath>
#include <random>

#include "hyperembed/errors.hpp"

namespace hyperembed {

PlantedPositions plant_positions(const ClusterPlan& plan) {
    if (plan.K < 1 || plan.m < 1 || plan.a < 0.0 || plan.gamma0 < 0.0)
        throw ConfigError("invalid cluster plan");
    const int n = plan.K * plan.m;
    std::mt19937_64 rng(plan.seed);
    std::uniform_real_distribution<double> noise(-plan.a, plan.a);

    PlantedPositions out;
    out.labels.resize(n);
    if (plan.geometry == Geometry::linear) {
        Eigen::MatrixXd coords(n, 1);
        for (int l = 0; l < plan.K; ++l)
            for (int j = 0; j < plan.m; ++j) {
                int i = l * plan.m + j;
                coords(i, 0) = 2.0 * l / plan.K + (plan.a > 0 ? noise(rng) : 0.0);
                out.labels[i] = l;
            }
        out.pos = linear_positions(std::move(coords));
    } else {
        Eigen::VectorXd theta(n);
        for (int l = 0; l < plan.K; ++l)
            for (int j = 0; j < plan.m; ++j) {
                int i = l * plan.m + j;
                theta[i] = 2.0 * M_PI * l / plan.K + (plan.a > 0 ? noise(rng) : 0.0);
                out.labels[i] = l;
            }
        out.pos = periodic_positions(std::move(theta));
    }
    return out;
}

SynthResult generate_until_connected(const ClusterPlan& plan,
                                     int max_attempts) {
    if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
    PlantedPositions planted = plant_positions(plan);

    ModelSpec model;
    model.geometry = plan.geometry;
    model.weights = plan.weights;
    model.gamma = plan.gamma0;
    model.max_cardinality = plan.max_cardinality;

    std::vector<std::size_t> last_sizes;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        // Distinct derived seed per attempt keeps draws reproducible.
        std::uint64_t draw_seed = plan.seed * 0x9e3779b97f4a7c15ull +
                                  static_cast<std::uint64_t>(attempt);
        Hypergraph h = sample(model, planted.pos, draw_seed);
        auto comps = binarized_components(h, plan.weights);
        if (comps.size() == 1) {
            SynthResult out;
            out.h = std::move(h);
            out.pos = planted.pos;
            out.labels = planted.labels;
            out.attempts = attempt;
            return out;
        }
        last_sizes.clear();
        for (const auto& c : comps) last_sizes.push_back(c.size());
    }
    std::string sizes;
    for (std::size_t s : last_sizes) {
        if (!sizes.empty()) sizes += ", ";
        sizes += std::to_string(s);
    }
    throw NumericalError("failed to generate a connected hypergraph in " +
                         std::to_string(max_attempts) +
                         " attempts; last component sizes: " + sizes);
}

}  // namespace hyperembed
