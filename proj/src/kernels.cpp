#include "hyperembed/kernels.hpp"

#include <cmath>

namespace hyperembed::kern {

double softplus_neg_scaled_sum_scalar(const double* a, std::size_t n,
                                      double gamma) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::log1p(std::exp(-gamma * a[i]));
    return acc;
}

void logistic_neg_scaled_scalar(const double* a, std::size_t n, double gamma,
                                double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        // exp(-z) <= 1 for z >= 0, so this form never overflows.
        double e = std::exp(-gamma * a[i]);
        out[i] = e / (1.0 + e);
    }
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::string active_variant() { return cpu_has_avx2() ? "avx2" : "scalar"; }

double softplus_neg_scaled_sum(const double* a, std::size_t n, double gamma) {
    static const bool avx2 = cpu_has_avx2();
    return avx2 ? softplus_neg_scaled_sum_avx2(a, n, gamma)
                : softplus_neg_scaled_sum_scalar(a, n, gamma);
}

void logistic_neg_scaled(const double* a, std::size_t n, double gamma,
                         double* out) {
    static const bool avx2 = cpu_has_avx2();
    if (avx2)
        logistic_neg_scaled_avx2(a, n, gamma, out);
    else
        logistic_neg_scaled_scalar(a, n, gamma, out);
}

}  // namespace hyperembed::kern
