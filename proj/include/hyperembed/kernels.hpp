#pragma once

#include <cstddef>
#include <string>

// Arithmetic kernels on the likelihood hot path. Each kernel has a scalar
// reference implementation and an AVX2+FMA variant; the unsuffixed entry
// points dispatch at runtime based on CPU support. The two variants are
// equivalence-tested against each other.
//
// All inputs `a` are nonnegative (a_i = c_{|R|} * incoherence of tuple R),
// so gamma * a_i >= 0 throughout.

namespace hyperembed::kern {

// sum_i log(1 + exp(-gamma * a_i))
double softplus_neg_scaled_sum(const double* a, std::size_t n, double gamma);
double softplus_neg_scaled_sum_scalar(const double* a, std::size_t n,
                                      double gamma);
double softplus_neg_scaled_sum_avx2(const double* a, std::size_t n,
                                    double gamma);

// out_i = 1 / (1 + exp(gamma * a_i))
void logistic_neg_scaled(const double* a, std::size_t n, double gamma,
                         double* out);
void logistic_neg_scaled_scalar(const double* a, std::size_t n, double gamma,
                                double* out);
void logistic_neg_scaled_avx2(const double* a, std::size_t n, double gamma,
                              double* out);

bool cpu_has_avx2();

// "avx2" or "scalar"; what the dispatching entry points will use.
std::string active_variant();

}  // namespace hyperembed::kern
