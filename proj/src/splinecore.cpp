#include "trigbs/splinecore.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "trigbs/trigpoly.hpp"

namespace trigbs {

namespace {

double pow_int(double base, int exponent) {
    double value = 1.0;
    for (int i = 0; i < exponent; ++i) value *= base;
    return value;
}

void validate(int order, int node_count, const Truncation& trunc) {
    if (order < 0) fail(ErrorCode::bad_spline_order, "spline order must be >= 0");
    grid_step(node_count);  // N odd and >= 3
    if (trunc.terms < 1) fail(ErrorCode::bad_truncation, "truncation order must be >= 1");
    const std::int64_t top = trunc.terms * node_count + (node_count - 1) / 2;
    if (top > std::numeric_limits<std::int32_t>::max())
        fail(ErrorCode::bad_truncation, "truncation too large: top frequency overflows");
}

void check_samples(const SampleSet& samples, GridId interpolation, int node_count) {
    if (!(samples.grid().variant() == interpolation))
        fail(ErrorCode::grid_mismatch,
             "samples live on grid " + std::to_string(samples.grid().variant().value()) +
                 " but the interpolation grid is " + std::to_string(interpolation.value()));
    if (samples.grid().size() != node_count)
        fail(ErrorCode::grid_mismatch,
             "samples have N=" + std::to_string(samples.grid().size()) +
                 " but the configuration says N=" + std::to_string(node_count));
}

// One pass over the whole frequency lattice in ascending order.  Every
// omega not divisible by N decomposes uniquely as mN+k (residue s <= n) or
// mN-k (residue s > n, with m = omega/N + 1); the base harmonics are the
// m = 0 case of the plus branch.  Emits
//   chi^m * sigma_omega(order) * (cw[k] cos(omega t) +- sw[k] sin(omega t))
// with the minus sign on the sine of the mN-k branch.
HarmonicSeries build_chain_series(double const_coeff, int node_count, int order,
                                  int sign_parity, std::int64_t terms,
                                  const std::vector<double>& cw,
                                  const std::vector<double>& sw) {
    const int n = (node_count - 1) / 2;
    const double pi = std::numbers::pi;
    std::vector<double> numer_pow(static_cast<size_t>(node_count));
    for (int s = 1; s < node_count; ++s)
        numer_pow[static_cast<size_t>(s)] =
            pow_int(std::sin(pi * s / node_count), order + 1);

    const std::int64_t top = terms * node_count + n;
    std::vector<HarmonicSeries::Term> out;
    out.reserve(static_cast<size_t>(top - top / node_count));
    for (std::int64_t w = 1; w <= top; ++w) {
        const std::int64_t q = w / node_count;
        const int s = static_cast<int>(w % node_count);
        if (s == 0) continue;
        const bool plus_branch = s <= n;
        const int k = plus_branch ? s : node_count - s;
        const std::int64_t m = plus_branch ? q : q + 1;
        double sigma_w = numer_pow[static_cast<size_t>(s)] /
                         pow_int(pi * static_cast<double>(w) / node_count, order + 1);
        if ((q * (order + 1)) & 1) sigma_w = -sigma_w;  // sign of sin(pi w/N)^(1+r)
        double coeff = sigma_w;
        if (sign_parity && (m & 1)) coeff = -coeff;
        const double cos_amp = coeff * cw[static_cast<size_t>(k)];
        double sin_amp = coeff * sw[static_cast<size_t>(k)];
        if (!plus_branch) sin_amp = -sin_amp;
        out.push_back({static_cast<std::uint32_t>(w), cos_amp, sin_amp});
    }
    return HarmonicSeries(const_coeff, std::move(out));
}

int kernel_sign_parity(KernelParity parity, GridId stitching) {
    return parity == KernelParity::even ? (1 + stitching.value()) & 1
                                        : stitching.value() & 1;
}

}  // namespace

bool IdentityReport::all_pass() const {
    for (const IdentityCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

HarmonicSeries build_spline(const SplineConfig& config, const SampleSet& samples) {
    validate(config.order, config.node_count, config.trunc);
    check_samples(samples, config.interpolation, config.node_count);
    const TrigPolyCoeffs coeffs = compute_coeffs(samples);
    const MultiplierTable table =
        multiplier_table(config.stitching, config.interpolation, config.order,
                         config.node_count, config.trunc);
    const int n = samples.grid().harmonics();
    std::vector<double> cw(static_cast<size_t>(n) + 1, 0.0);
    std::vector<double> sw(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        cw[static_cast<size_t>(k)] = coeffs.a(k) / table.value(k);
        sw[static_cast<size_t>(k)] = coeffs.b(k) / table.value(k);
    }
    const int parity = (config.order + 1 + config.stitching.value()) & 1;
    return build_chain_series(coeffs.a(0), config.node_count, config.order, parity,
                              config.trunc.terms, cw, sw);
}

HarmonicSeries build_kernel_first_kind(const SplineConfig& config, const SampleSet& samples) {
    validate(config.order, config.node_count, config.trunc);
    check_samples(samples, config.interpolation, config.node_count);
    const TrigPolyCoeffs coeffs = compute_coeffs(samples);
    const MultiplierTable table =
        multiplier_table(config.stitching, config.interpolation, config.order,
                         config.node_count, config.trunc);
    const int n = samples.grid().harmonics();
    std::vector<double> cw(static_cast<size_t>(n) + 1, 0.0);
    std::vector<double> sw(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        cw[static_cast<size_t>(k)] = coeffs.a(k) / table.value(k);
        sw[static_cast<size_t>(k)] = coeffs.b(k) / table.value(k);
    }
    const KernelParity parity =
        config.order % 2 == 0 ? KernelParity::even : KernelParity::odd;
    return build_chain_series(coeffs.a(0), config.node_count, /*order=*/0,
                              kernel_sign_parity(parity, config.stitching),
                              config.trunc.terms, cw, sw);
}

HarmonicSeries build_bspline_first_kind(int order, int node_count, const Truncation& trunc) {
    validate(order, node_count, trunc);
    const int n = (node_count - 1) / 2;
    const double inv_pi = 1.0 / std::numbers::pi;
    std::vector<double> cw(static_cast<size_t>(n) + 1, inv_pi);
    std::vector<double> sw(static_cast<size_t>(n) + 1, 0.0);
    cw[0] = 0.0;
    return build_chain_series(inv_pi, node_count, order, /*sign_parity=*/0, trunc.terms,
                              cw, sw);
}

HarmonicSeries build_kernel_second_kind(GridId stitching, GridId interpolation,
                                        KernelParity parity, const SampleSet& samples,
                                        const Truncation& trunc) {
    const int node_count = samples.grid().size();
    validate(0, node_count, trunc);
    check_samples(samples, interpolation, node_count);
    const TrigPolyCoeffs coeffs = compute_coeffs(samples);
    const int n = samples.grid().harmonics();
    std::vector<double> cw(static_cast<size_t>(n) + 1, 0.0);
    std::vector<double> sw(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        cw[static_cast<size_t>(k)] = coeffs.a(k);
        sw[static_cast<size_t>(k)] = coeffs.b(k);
    }
    return build_chain_series(coeffs.a(0), node_count, /*order=*/0,
                              kernel_sign_parity(parity, stitching), trunc.terms, cw, sw);
}

HarmonicSeries build_bspline_second_kind(GridId stitching, GridId interpolation, int order,
                                         int node_count, const Truncation& trunc) {
    validate(order, node_count, trunc);
    const MultiplierTable table =
        multiplier_table(stitching, interpolation, order + 1, node_count, trunc);
    const int n = (node_count - 1) / 2;
    const double inv_pi = 1.0 / std::numbers::pi;
    std::vector<double> cw(static_cast<size_t>(n) + 1, 0.0);
    std::vector<double> sw(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) cw[static_cast<size_t>(k)] = inv_pi / table.value(k);
    return build_chain_series(inv_pi, node_count, order, /*sign_parity=*/0, trunc.terms,
                              cw, sw);
}

HarmonicSeries spline_via_convolution_first(const SplineConfig& config,
                                            const SampleSet& samples) {
    if (config.order < 1)
        fail(ErrorCode::bad_spline_order,
             "convolution route needs order >= 1 (order-(-1) B-spline does not decay)");
    return convolve(build_kernel_first_kind(config, samples),
                    build_bspline_first_kind(config.order - 1, config.node_count,
                                             config.trunc));
}

HarmonicSeries spline_via_convolution_second(const SplineConfig& config,
                                             const SampleSet& samples) {
    if (config.order < 1)
        fail(ErrorCode::bad_spline_order,
             "convolution route needs order >= 1 (order-(-1) B-spline does not decay)");
    const KernelParity parity =
        config.order % 2 == 0 ? KernelParity::even : KernelParity::odd;
    return convolve(build_kernel_second_kind(config.stitching, config.interpolation,
                                             parity, samples, config.trunc),
                    build_bspline_second_kind(config.stitching, config.interpolation,
                                              config.order - 1, config.node_count,
                                              config.trunc));
}

IdentityReport verify_identities(const SampleSet& samples_grid0,
                                 const SampleSet& samples_grid1,
                                 const std::vector<int>& orders, const Truncation& trunc,
                                 double tolerance, int sample_points) {
    if (samples_grid0.grid().variant().value() != 0 ||
        samples_grid1.grid().variant().value() != 1)
        fail(ErrorCode::grid_mismatch, "expected one sample set per grid variant (0 then 1)");
    const int node_count = samples_grid0.grid().size();
    if (samples_grid1.grid().size() != node_count)
        fail(ErrorCode::grid_mismatch, "sample sets disagree on N");

    const GridId g0(0), g1(1);
    const double half_step = 0.5 * grid_step(node_count);
    IdentityReport report;
    auto add = [&](std::string name, double residual) {
        report.checks.push_back({std::move(name), residual, tolerance,
                                 residual <= tolerance});
    };

    auto kernel = [&](int i1, int i2, KernelParity parity) {
        return build_kernel_second_kind(GridId(i1), GridId(i2), parity,
                                        i2 == 0 ? samples_grid0 : samples_grid1, trunc);
    };

    // Even-family chain: KR0*(0,0,t) = KR0*(1,1,t+h/2) = KR1*(1,0,t)
    //                    = KR1*(0,1,t+h/2).
    {
        const HarmonicSeries head = kernel(0, 0, KernelParity::even);
        add("KR0*(0,0,t) = KR0*(1,1,t+h/2)",
            sup_diff(head, shift(kernel(1, 1, KernelParity::even), half_step),
                     sample_points));
        add("KR0*(0,0,t) = KR1*(1,0,t)",
            sup_diff(head, kernel(1, 0, KernelParity::odd), sample_points));
        add("KR0*(0,0,t) = KR1*(0,1,t+h/2)",
            sup_diff(head, shift(kernel(0, 1, KernelParity::odd), half_step),
                     sample_points));
    }
    // Odd-family chain: KR1*(0,0,t) = KR1*(1,1,t+h/2) = KR0*(1,0,t)
    //                   = KR0*(0,1,t+h/2).
    {
        const HarmonicSeries head = kernel(0, 0, KernelParity::odd);
        add("KR1*(0,0,t) = KR1*(1,1,t+h/2)",
            sup_diff(head, shift(kernel(1, 1, KernelParity::odd), half_step),
                     sample_points));
        add("KR1*(0,0,t) = KR0*(1,0,t)",
            sup_diff(head, kernel(1, 0, KernelParity::even), sample_points));
        add("KR1*(0,0,t) = KR0*(0,1,t+h/2)",
            sup_diff(head, shift(kernel(0, 1, KernelParity::even), half_step),
                     sample_points));
    }
    for (int r : orders) {
        add("BR*(0,0," + std::to_string(r) + ") = BR*(1,1," + std::to_string(r) + ")",
            sup_diff(build_bspline_second_kind(g0, g0, r, node_count, trunc),
                     build_bspline_second_kind(g1, g1, r, node_count, trunc),
                     sample_points));
        add("BR*(1,0," + std::to_string(r) + ") = BR*(0,1," + std::to_string(r) + ")",
            sup_diff(build_bspline_second_kind(g1, g0, r, node_count, trunc),
                     build_bspline_second_kind(g0, g1, r, node_count, trunc),
                     sample_points));
    }
    return report;
}

}  // namespace trigbs
