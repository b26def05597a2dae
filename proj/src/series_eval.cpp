#include "trigbs/series_eval.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

#include <bit>
#include <cmath>
#include <numbers>

namespace trigbs::kernels {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvTwoPi = 1.0 / kTwoPi;
// fl(2*pi) and the residual 2*pi - fl(2*pi); the pair carries 2*pi to ~1e-32.
constexpr double kTwoPiHi = 6.283185307179586232e+00;
constexpr double kTwoPiLo = 2.449293598294706414e-16;
// Steps between recurrence reseeds; keeps rotation drift below ~3e-14.
constexpr std::size_t kReseedBlock = 256;

double mask_low_27(double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    bits &= ~((std::uint64_t{1} << 27) - 1);
    return std::bit_cast<double>(bits);
}

struct TwoPiSplit {
    double d0, d1, d2;
    TwoPiSplit() {
        d0 = mask_low_27(kTwoPiHi);
        const double rem = kTwoPiHi - d0;  // exact
        d1 = mask_low_27(rem);
        d2 = (rem - d1) + kTwoPiLo;
    }
};
const TwoPiSplit kSplit;

}  // namespace

double reduce_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

void sincos_phase(std::uint32_t omega, double t_reduced, double& c, double& s) {
    if (omega == 0) {
        c = 1.0;
        s = 0.0;
        return;
    }
    const double w = static_cast<double>(omega);
    const double p_hi = w * t_reduced;
    const double p_lo = std::fma(w, t_reduced, -p_hi);  // exact residue
    const double k = std::nearbyint(p_hi * kInvTwoPi);
    double r = p_hi - k * kSplit.d0;  // k*d0 exact: d0 has 27 trailing zero bits
    r -= k * kSplit.d1;
    r -= k * kSplit.d2;
    r += p_lo;
    c = std::cos(r);
    s = std::sin(r);
}

void eval_batch_reference(const DenseSeries& series, std::span<const double> t,
                          std::span<double> out) {
    const std::size_t count = series.cos_amp.size();
    const long double two_pi_l = 6.283185307179586476925286766559006L;
    for (std::size_t p = 0; p < t.size(); ++p) {
        const long double tr = static_cast<long double>(reduce_angle(t[p]));
        long double acc = 0.5L * static_cast<long double>(series.const_coeff);
        for (std::size_t i = 0; i < count; ++i) {
            const long double phase =
                std::fmod(static_cast<long double>(i + 1) * tr, two_pi_l);
            acc += static_cast<long double>(series.cos_amp[i]) * std::cos(phase) +
                   static_cast<long double>(series.sin_amp[i]) * std::sin(phase);
        }
        out[p] = static_cast<double>(acc);
    }
}

void eval_batch_scalar(const DenseSeries& series, std::span<const double> t,
                       std::span<double> out) {
    const std::size_t count = series.cos_amp.size();
    const double* ca = series.cos_amp.data();
    const double* sa = series.sin_amp.data();
    for (std::size_t p = 0; p < t.size(); ++p) {
        const double tr = reduce_angle(t[p]);
        const double rot_c = std::cos(tr);
        const double rot_s = std::sin(tr);
        double acc = 0.0;
        std::size_t w = 1;
        while (w <= count) {
            const std::size_t block_end = std::min(count, w + kReseedBlock - 1);
            double c, s;
            sincos_phase(static_cast<std::uint32_t>(w), tr, c, s);
            for (; w <= block_end; ++w) {
                acc += ca[w - 1] * c + sa[w - 1] * s;
                const double cn = c * rot_c - s * rot_s;
                s = s * rot_c + c * rot_s;
                c = cn;
            }
        }
        out[p] = 0.5 * series.const_coeff + acc;
    }
}

#if defined(__aarch64__)
void eval_batch_neon(const DenseSeries& series, std::span<const double> t,
                     std::span<double> out) {
    const std::size_t count = series.cos_amp.size();
    const double* ca = series.cos_amp.data();
    const double* sa = series.sin_amp.data();
    std::size_t p = 0;
    for (; p + 2 <= t.size(); p += 2) {
        double tr[2] = {reduce_angle(t[p]), reduce_angle(t[p + 1])};
        double rc[2] = {std::cos(tr[0]), std::cos(tr[1])};
        double rs[2] = {std::sin(tr[0]), std::sin(tr[1])};
        float64x2_t rot_c = vld1q_f64(rc);
        float64x2_t rot_s = vld1q_f64(rs);
        float64x2_t acc = vdupq_n_f64(0.0);
        std::size_t w = 1;
        while (w <= count) {
            const std::size_t block_end = std::min(count, w + kReseedBlock - 1);
            double cb[2], sb[2];
            sincos_phase(static_cast<std::uint32_t>(w), tr[0], cb[0], sb[0]);
            sincos_phase(static_cast<std::uint32_t>(w), tr[1], cb[1], sb[1]);
            float64x2_t c = vld1q_f64(cb);
            float64x2_t s = vld1q_f64(sb);
            for (; w <= block_end; ++w) {
                acc = vfmaq_n_f64(acc, c, ca[w - 1]);
                acc = vfmaq_n_f64(acc, s, sa[w - 1]);
                float64x2_t cn = vfmsq_f64(vmulq_f64(c, rot_c), s, rot_s);
                s = vfmaq_f64(vmulq_f64(s, rot_c), c, rot_s);
                c = cn;
            }
        }
        acc = vaddq_f64(acc, vdupq_n_f64(0.5 * series.const_coeff));
        vst1q_f64(&out[p], acc);
    }
    if (p < t.size())
        eval_batch_scalar(series, t.subspan(p), out.subspan(p));
}
#endif

EvalFn dispatch() {
    static const EvalFn fn = []() -> EvalFn {
#if defined(__x86_64__) || defined(_M_X64)
        if (avx2_supported()) return &eval_batch_avx2;
#endif
#if defined(__aarch64__)
        return &eval_batch_neon;
#endif
        return &eval_batch_scalar;
    }();
    return fn;
}

const char* dispatch_name() {
#if defined(__x86_64__) || defined(_M_X64)
    if (dispatch() == &eval_batch_avx2) return "avx2";
#endif
#if defined(__aarch64__)
    if (dispatch() == &eval_batch_neon) return "neon";
#endif
    return "scalar";
}

std::vector<Variant> available_variants() {
    std::vector<Variant> v;
    v.push_back({"reference", &eval_batch_reference});
    v.push_back({"scalar", &eval_batch_scalar});
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) v.push_back({"avx2", &eval_batch_avx2});
#endif
#if defined(__aarch64__)
    v.push_back({"neon", &eval_batch_neon});
#endif
    return v;
}

}  // namespace trigbs::kernels
