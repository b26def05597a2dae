// AVX2/FMA evaluation variant: four evaluation points per vector lane set.
// This translation unit is compiled with -mavx2 -mfma; callers must gate on
// avx2_supported().
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "trigbs/series_eval.hpp"

namespace trigbs::kernels {

namespace {
constexpr std::size_t kReseedBlock = 256;
}

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

void eval_batch_avx2(const DenseSeries& series, std::span<const double> t,
                     std::span<double> out) {
    const std::size_t count = series.cos_amp.size();
    const double* ca = series.cos_amp.data();
    const double* sa = series.sin_amp.data();
    std::size_t p = 0;
    for (; p + 4 <= t.size(); p += 4) {
        double tr[4], rc[4], rs[4];
        for (int l = 0; l < 4; ++l) {
            tr[l] = reduce_angle(t[p + l]);
            rc[l] = std::cos(tr[l]);
            rs[l] = std::sin(tr[l]);
        }
        const __m256d rot_c = _mm256_loadu_pd(rc);
        const __m256d rot_s = _mm256_loadu_pd(rs);
        __m256d acc = _mm256_setzero_pd();
        std::size_t w = 1;
        while (w <= count) {
            const std::size_t block_end = std::min(count, w + kReseedBlock - 1);
            double cb[4], sb[4];
            for (int l = 0; l < 4; ++l)
                sincos_phase(static_cast<std::uint32_t>(w), tr[l], cb[l], sb[l]);
            __m256d c = _mm256_loadu_pd(cb);
            __m256d s = _mm256_loadu_pd(sb);
            for (; w <= block_end; ++w) {
                const __m256d bc = _mm256_broadcast_sd(&ca[w - 1]);
                const __m256d bs = _mm256_broadcast_sd(&sa[w - 1]);
                acc = _mm256_fmadd_pd(bc, c, acc);
                acc = _mm256_fmadd_pd(bs, s, acc);
                const __m256d cn = _mm256_fnmadd_pd(s, rot_s, _mm256_mul_pd(c, rot_c));
                s = _mm256_fmadd_pd(c, rot_s, _mm256_mul_pd(s, rot_c));
                c = cn;
            }
        }
        acc = _mm256_add_pd(acc, _mm256_set1_pd(0.5 * series.const_coeff));
        _mm256_storeu_pd(&out[p], acc);
    }
    if (p < t.size())
        eval_batch_scalar(series, t.subspan(p), out.subspan(p));
}

}  // namespace trigbs::kernels

#endif  // x86_64
