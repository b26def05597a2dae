// Batch evaluation kernels for dense harmonic series.
//
// A series with frequencies 1..F is stored as two parallel amplitude arrays
// (index w-1 holds frequency w) plus a constant coefficient a0 whose
// contribution is a0/2.  Evaluating
//
//   f(t) = a0/2 + sum_w cos_amp[w] cos(w t) + sin_amp[w] sin(w t)
//
// over a batch of points is the hot loop of every sup-norm check and curve
// emission.  The fast variants run the phasor recurrence
// (cos((w+1)t), sin((w+1)t)) = rot(t) * (cos(wt), sin(wt)) along w, reseeding
// from an exactly reduced phase every few hundred steps to stop drift; the
// SIMD variants place 4 (AVX2) or 2 (NEON) evaluation points in the lanes.
//
// Variant selection happens once at runtime; all variants are equivalence-
// tested against eval_batch_reference.
#ifndef TRIGBS_SERIES_EVAL_HPP
#define TRIGBS_SERIES_EVAL_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace trigbs::kernels {

struct DenseSeries {
    double const_coeff = 0.0;
    std::span<const double> cos_amp;
    std::span<const double> sin_amp;
};

/// t wrapped into [0, 2*pi).
double reduce_angle(double t);

/// cos/sin of omega*t for integer omega and t in [0, 2*pi).  The product is
/// formed exactly in double-double via FMA and reduced with a three-term
/// split of 2*pi, so the result stays at the ~1 ulp level for any omega the
/// library can produce.
void sincos_phase(std::uint32_t omega, double t_reduced, double& c, double& s);

/// Plain per-term evaluation with long double accumulation.  Slow; the
/// ground truth the other variants are tested against.
void eval_batch_reference(const DenseSeries& series, std::span<const double> t,
                          std::span<double> out);

/// Phasor-recurrence scalar kernel (portable fast path).
void eval_batch_scalar(const DenseSeries& series, std::span<const double> t,
                       std::span<double> out);

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
void eval_batch_avx2(const DenseSeries& series, std::span<const double> t,
                     std::span<double> out);
#endif
#if defined(__aarch64__)
void eval_batch_neon(const DenseSeries& series, std::span<const double> t,
                     std::span<double> out);
#endif

using EvalFn = void (*)(const DenseSeries&, std::span<const double>, std::span<double>);

/// Best variant for this machine, resolved on first call.
EvalFn dispatch();
const char* dispatch_name();

struct Variant {
    const char* name;
    EvalFn fn;
};
/// Every variant runnable on this machine (reference included).
std::vector<Variant> available_variants();

}  // namespace trigbs::kernels

#endif
