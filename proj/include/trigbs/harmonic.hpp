// Sparse trigonometric series value type and its algebra.
//
// A series is the constant a0/2 plus finitely many terms
// cos_amp(w) cos(wt) + sin_amp(w) sin(wt) over positive integer frequencies.
// Frequencies are kept sparse (sorted) because the spline series live on the
// lattice mN+-k, which skips every multiple of N; the gaps make the
// uniqueness of that decomposition visible and keep coefficient-level
// identity checks exact.
//
// Periodic convolution (f*g)(t) = integral over one period of f(t-v) g(v) dv
// acts frequency-wise.  With ∫ cos^2(wv) dv = ∫ sin^2(wv) dv = pi over a
// period, the term at a common frequency w picks up the factor pi and the
// phasor product rule:
//   cos' = pi (cosA cosB - sinA sinB),  sin' = pi (cosA sinB + sinA cosB).
// For the constants, ∫ (a0/2)(c0/2) dv = 2pi a0 c0 / 4 = pi a0 c0 / 2, and a
// constant term x/2 is stored as coefficient x, so const' = pi a0 c0.
#ifndef TRIGBS_HARMONIC_HPP
#define TRIGBS_HARMONIC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trigbs/error.hpp"

namespace trigbs {

class HarmonicSeries {
  public:
    struct Term {
        std::uint32_t freq;
        double cos_amp;
        double sin_amp;
    };

    HarmonicSeries() = default;
    /// Terms may arrive unsorted and with repeated frequencies (amplitudes
    /// accumulate).  Frequencies must be >= 1 and amplitudes finite; pairs
    /// with both magnitudes below 1e-300 are dropped.
    HarmonicSeries(double const_coeff, std::vector<Term> terms);

    static HarmonicSeries constant(double value) { return HarmonicSeries(2.0 * value, {}); }

    double const_coeff() const noexcept { return const_coeff_; }
    std::size_t term_count() const noexcept { return freq_.size(); }
    std::uint32_t max_freq() const noexcept { return freq_.empty() ? 0 : freq_.back(); }
    std::span<const std::uint32_t> freqs() const noexcept { return freq_; }
    std::span<const double> cos_amps() const noexcept { return cos_amp_; }
    std::span<const double> sin_amps() const noexcept { return sin_amp_; }
    /// (cos_amp, sin_amp) at freq, (0,0) when absent.
    Term term(std::uint32_t freq) const;

    double eval(double t) const;
    void eval_many(std::span<const double> t, std::span<double> out) const;

    /// Exact integral over any length-2*pi window: pi * const_coeff.
    double integrate_period() const noexcept;

    std::string to_json() const;
    static HarmonicSeries from_json(const std::string& text);

  private:
    double const_coeff_ = 0.0;
    std::vector<std::uint32_t> freq_;  // ascending
    std::vector<double> cos_amp_;
    std::vector<double> sin_amp_;
};

/// Periodic convolution over [0, 2*pi]; see the factor-of-pi rules above.
/// Frequencies present in only one operand vanish.
HarmonicSeries convolve(const HarmonicSeries& a, const HarmonicSeries& b);

/// Series of t -> f(t + s).
HarmonicSeries shift(const HarmonicSeries& f, double s);

struct ScaledSeries {
    double weight;
    const HarmonicSeries* series;
};
HarmonicSeries linear_combine(std::span<const ScaledSeries> parts);

/// max |a(t) - b(t)| over `samples` equispaced points in [0, 2*pi).
/// Implemented as evaluation of the coefficient difference, so residuals of
/// coefficient-identical series sit at rounding level instead of being
/// floored by cancellation of two large values.
double sup_diff(const HarmonicSeries& a, const HarmonicSeries& b, int samples);

}  // namespace trigbs

#endif
