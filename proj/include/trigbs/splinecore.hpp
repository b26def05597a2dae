// Construction of interpolating trigonometric splines, their kernels and
// trigonometric B-splines, all as HarmonicSeries over the frequency lattice
// {k} ∪ {mN+-k}, 1 <= k <= n, 1 <= m <= terms.
//
// Series families (data weights from the interpolation-grid coefficients
// a_k, b_k; sign chi^m with chi = +-1; damping sigma of some order):
//
//   spline St(I1,I2,r):        sigma(r),  chi from parity(r+1+I1), weights /H_k(I1,I2,r)
//   kernel first kind KR:      sigma(0),  chi from parity(1+I1) (even r) or
//                              parity(I1) (odd r), weights /H_k(I1,I2,r)
//   kernel second kind KR*:    sigma(0),  same chi as KR, raw weights, no H
//   B-spline first kind BR(r): cosine-only, sigma(r), no sign, amplitudes /pi
//   B-spline second kind BR*:  BR(r) with each chain divided by H_k(I1,I2,r+1)
//
// The spline interpolates because at the interpolation-grid nodes every
// aliased frequency mN+-k collapses onto k with exactly the sign pattern of
// H_k; at matched truncation the collapse is term-by-term, so interpolation
// holds to rounding for any truncation order.
//
// The convolution routes reassemble St frequency-wise:
// sigma(0)*sigma(r-1) = sigma(r) and the factor pi of the periodic
// convolution cancels the 1/pi of the B-spline.
#ifndef TRIGBS_SPLINECORE_HPP
#define TRIGBS_SPLINECORE_HPP

#include <string>
#include <vector>

#include "trigbs/grid.hpp"
#include "trigbs/harmonic.hpp"
#include "trigbs/multipliers.hpp"

namespace trigbs {

struct SplineConfig {
    GridId stitching;       // grid whose nodes join the polynomial-analog pieces
    GridId interpolation;   // grid carrying the data
    int order = 1;          // r >= 0
    int node_count = 9;     // N = 2n+1
    Truncation trunc;
};

enum class KernelParity { even, odd };

HarmonicSeries build_spline(const SplineConfig& config, const SampleSet& samples);

/// Order-0 damped, H-renormalized data series; even/odd sign family selected
/// by the parity of config.order.
HarmonicSeries build_kernel_first_kind(const SplineConfig& config, const SampleSet& samples);

/// Cosine series that coincides with the unit-integral cardinal polynomial
/// B-spline of degree `order` on [-pi, pi].
HarmonicSeries build_bspline_first_kind(int order, int node_count, const Truncation& trunc);

/// Data series without the H factor; independent of the spline order.
HarmonicSeries build_kernel_second_kind(GridId stitching, GridId interpolation,
                                        KernelParity parity, const SampleSet& samples,
                                        const Truncation& trunc);

HarmonicSeries build_bspline_second_kind(GridId stitching, GridId interpolation, int order,
                                         int node_count, const Truncation& trunc);

/// St via KR ⊛ BR(r-1); requires order >= 1 (BR(-1) would not decay).
HarmonicSeries spline_via_convolution_first(const SplineConfig& config,
                                            const SampleSet& samples);

/// St via KR* ⊛ BR*(r-1); requires order >= 1.
HarmonicSeries spline_via_convolution_second(const SplineConfig& config,
                                             const SampleSet& samples);

struct IdentityCheck {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};

/// Measures the kernel equality chains (both sign families, including the
/// half-step shift carried by the members whose data lives on grid 1) and
/// the grid-combination equivalences of the second-kind B-splines for each
/// order in `orders`.  Failures are reported, not thrown.
IdentityReport verify_identities(const SampleSet& samples_grid0,
                                 const SampleSet& samples_grid1,
                                 const std::vector<int>& orders, const Truncation& trunc,
                                 double tolerance, int sample_points = 1000);

}  // namespace trigbs

#endif
