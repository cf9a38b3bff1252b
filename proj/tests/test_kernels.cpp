#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hyperembed/kernels.hpp"

using namespace hyperembed;

namespace {

std::vector<double> random_values(std::size_t n, double scale,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, scale);
    std::vector<double> v(n);
    for (double& x : v) x = unif(rng);
    return v;
}

}  // namespace

TEST_CASE("scalar softplus sum matches the direct formula") {
    std::vector<double> a = {0.0, 1.0, 2.5, 100.0};
    double gamma = 0.7;
    double expected = 0.0;
    for (double x : a) expected += std::log1p(std::exp(-gamma * x));
    CHECK(kern::softplus_neg_scaled_sum_scalar(a.data(), a.size(), gamma) ==
          doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("avx2 softplus sum agrees with scalar") {
    if (!kern::cpu_has_avx2()) return;
    for (double gamma : {1e-6, 1e-3, 0.3, 1.0, 17.0, 1e3}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            auto a = random_values(1003, 50.0, seed);  // odd size hits the tail
            double s = kern::softplus_neg_scaled_sum_scalar(a.data(), a.size(),
                                                            gamma);
            double v = kern::softplus_neg_scaled_sum_avx2(a.data(), a.size(),
                                                          gamma);
            CHECK(std::abs(v - s) <= 1e-12 * std::abs(s) + 1e-9);
        }
    }
}

TEST_CASE("avx2 logistic agrees with scalar elementwise") {
    if (!kern::cpu_has_avx2()) return;
    auto a = random_values(517, 200.0, 99);
    a.push_back(0.0);
    a.push_back(1e6);  // deep saturation
    std::vector<double> ps(a.size()), pv(a.size());
    for (double gamma : {1e-4, 1.0, 50.0}) {
        kern::logistic_neg_scaled_scalar(a.data(), a.size(), gamma, ps.data());
        kern::logistic_neg_scaled_avx2(a.data(), a.size(), gamma, pv.data());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(std::isfinite(pv[i]));
            CHECK(std::abs(pv[i] - ps[i]) <=
                  1e-13 * std::abs(ps[i]) + 1e-300);
        }
    }
}

TEST_CASE("saturated inputs underflow without NaN") {
    std::vector<double> a = {800.0, 5000.0};
    std::vector<double> p(a.size());
    kern::logistic_neg_scaled(a.data(), a.size(), 1.0, p.data());
    for (double x : p) {
        CHECK(std::isfinite(x));
        CHECK(x >= 0.0);
        CHECK(x <= 1e-300);
    }
    double s = kern::softplus_neg_scaled_sum(a.data(), a.size(), 1.0);
    CHECK(std::isfinite(s));
    CHECK(s >= 0.0);
}

TEST_CASE("dispatcher reports a known variant") {
    auto v = kern::active_variant();
    CHECK((v == "avx2" || v == "scalar"));
}
