// AVX2+FMA variants of the likelihood kernels. This translation unit is
// compiled with -mavx2 -mfma; callers must check cpu_has_avx2() first.
//
// exp and log cores are ports of the Cephes double-precision routines
// (rational approximations, ~1-2 ulp), restricted to the ranges these
// kernels need: exp(x) for x <= 0 and log(m) for m in [1, 2].

#include "hyperembed/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstdint>

namespace hyperembed::kern {

namespace {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// exp(x) for x in [-746, 0]. Underflows to 0 below about -745.1.
inline __m256d exp_nonpos(__m256d x) {
    const __m256d min_x = splat(-745.13321910194110842);
    __m256d underflow = _mm256_cmp_pd(x, min_x, _CMP_LT_OQ);
    x = _mm256_max_pd(x, min_x);

    // n = round(x * log2(e))
    const __m256d log2e = splat(1.4426950408889634074);
    __m256d nf = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                 _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);

    // r = x - n*ln2, split-constant reduction
    const __m256d c1 = splat(6.93145751953125e-1);
    const __m256d c2 = splat(1.42860682030941723212e-6);
    __m256d r = _mm256_fnmadd_pd(nf, c1, x);
    r = _mm256_fnmadd_pd(nf, c2, r);

    __m256d rr = _mm256_mul_pd(r, r);
    // p = r * P(r^2)
    __m256d p = splat(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, rr, splat(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, rr, splat(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, r);
    // q = Q(r^2)
    __m256d q = splat(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, rr, splat(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, rr, splat(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, rr, splat(2.0));
    // e = 1 + 2p/(q - p)
    __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    e = _mm256_fmadd_pd(e, splat(2.0), splat(1.0));

    // e * 2^n with n in [-1075, 0]; two half-steps so each factor stays a
    // normal double and the final product may land in the subnormals.
    // n <= 0, so split via the nonnegative magnitude m = -n.
    __m128i n32 = _mm256_cvtpd_epi32(nf);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i zero = _mm256_setzero_si256();
    __m256i mag = _mm256_sub_epi64(zero, n64);
    __m256i mag_hi = _mm256_srli_epi64(mag, 1);
    __m256i n_hi = _mm256_sub_epi64(zero, mag_hi);
    __m256i n_lo = _mm256_sub_epi64(n64, n_hi);

    const __m256i bias = _mm256_set1_epi64x(1023);
    __m256d s_hi = _mm256_castsi256_pd(
        _mm256_slli_epi64(_mm256_add_epi64(n_hi, bias), 52));
    __m256d s_lo = _mm256_castsi256_pd(
        _mm256_slli_epi64(_mm256_add_epi64(n_lo, bias), 52));
    e = _mm256_mul_pd(_mm256_mul_pd(e, s_hi), s_lo);
    return _mm256_andnot_pd(underflow, e);
}

// log(m) for m in [1, 2].
inline __m256d log_1to2(__m256d m) {
    const __m256d sqrt2 = splat(1.41421356237309504880);
    __m256d big = _mm256_cmp_pd(m, sqrt2, _CMP_GT_OQ);
    // e = 1 where m > sqrt(2), halving m into [sqrt(1/2), sqrt(2)]
    __m256d e = _mm256_and_pd(big, splat(1.0));
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), big);
    __m256d x = _mm256_sub_pd(m, splat(1.0));
    __m256d z = _mm256_mul_pd(x, x);

    __m256d p = splat(1.01875663804580931796e-4);
    p = _mm256_fmadd_pd(p, x, splat(4.97494994976747001425e-1));
    p = _mm256_fmadd_pd(p, x, splat(4.70579119878881725854e0));
    p = _mm256_fmadd_pd(p, x, splat(1.44989225341610930846e1));
    p = _mm256_fmadd_pd(p, x, splat(1.79368678507819816313e1));
    p = _mm256_fmadd_pd(p, x, splat(7.70838733755885391666e0));

    __m256d q = _mm256_add_pd(x, splat(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, x, splat(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, x, splat(8.29875266912776603211e1));
    q = _mm256_fmadd_pd(q, x, splat(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, x, splat(2.31251620126765340583e1));

    __m256d y = _mm256_mul_pd(x, _mm256_div_pd(_mm256_mul_pd(z, p), q));
    y = _mm256_fnmadd_pd(e, splat(2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(splat(0.5), z, y);
    __m256d r = _mm256_add_pd(x, y);
    return _mm256_fmadd_pd(e, splat(0.693359375), r);
}

// log(1 + y) for y in [0, 1]; series fallback keeps precision when 1 + y
// would round y away.
inline __m256d log1p_unit(__m256d y) {
    const __m256d tiny = splat(7.450580596923828125e-9);  // 2^-27
    __m256d small = _mm256_cmp_pd(y, tiny, _CMP_LT_OQ);
    __m256d series = _mm256_fnmadd_pd(_mm256_mul_pd(splat(0.5), y), y, y);
    __m256d full = log_1to2(_mm256_add_pd(splat(1.0), y));
    return _mm256_blendv_pd(full, series, small);
}

}  // namespace

double softplus_neg_scaled_sum_avx2(const double* a, std::size_t n,
                                    double gamma) {
    const __m256d ng = splat(-gamma);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d z = _mm256_mul_pd(ng, _mm256_loadu_pd(a + i));
        acc = _mm256_add_pd(acc, log1p_unit(exp_nonpos(z)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) sum += softplus_neg_scaled_sum_scalar(a + i, 1, gamma);
    return sum;
}

void logistic_neg_scaled_avx2(const double* a, std::size_t n, double gamma,
                              double* out) {
    const __m256d ng = splat(-gamma);
    const __m256d one = splat(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d z = _mm256_mul_pd(ng, _mm256_loadu_pd(a + i));
        __m256d e = exp_nonpos(z);
        _mm256_storeu_pd(out + i, _mm256_div_pd(e, _mm256_add_pd(one, e)));
    }
    if (i < n) logistic_neg_scaled_scalar(a + i, n - i, gamma, out + i);
}

}  // namespace hyperembed::kern

#else  // non-x86: dispatcher never selects these

namespace hyperembed::kern {

double softplus_neg_scaled_sum_avx2(const double* a, std::size_t n,
                                    double gamma) {
    return softplus_neg_scaled_sum_scalar(a, n, gamma);
}

void logistic_neg_scaled_avx2(const double* a, std::size_t n, double gamma,
                              double* out) {
    logistic_neg_scaled_scalar(a, n, gamma, out);
}

}  // namespace hyperembed::kern

#endif
