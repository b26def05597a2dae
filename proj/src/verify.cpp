#include "trigbs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "trigbs/grid.hpp"
#include "trigbs/harmonic.hpp"
#include "trigbs/multipliers.hpp"
#include "trigbs/oracles.hpp"
#include "trigbs/series_eval.hpp"
#include "trigbs/splinecore.hpp"
#include "trigbs/trigpoly.hpp"

namespace trigbs::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sample_function(const UniformGrid& grid,
                                    const std::function<double(double)>& fn) {
    std::vector<double> values(static_cast<size_t>(grid.size()));
    for (int i = 0; i < grid.size(); ++i) values[static_cast<size_t>(i)] = fn(grid.node(i));
    return values;
}

/// max |series(t) - fn(t)| over `points`+1 equispaced t in [lo, hi], skipping
/// t within `exclusion` of any value in `exclude_near`.
double sup_vs_function(const HarmonicSeries& series, const std::function<double(double)>& fn,
                       double lo, double hi, int points, double exclusion = 0.0,
                       const std::vector<double>& exclude_near = {}) {
    std::vector<double> t(static_cast<size_t>(points) + 1);
    std::vector<double> v(static_cast<size_t>(points) + 1);
    for (int i = 0; i <= points; ++i)
        t[static_cast<size_t>(i)] = lo + (hi - lo) * i / points;
    series.eval_many(t, v);
    double mx = 0.0;
    for (int i = 0; i <= points; ++i) {
        bool skip = false;
        for (double j : exclude_near)
            if (std::abs(t[static_cast<size_t>(i)] - j) < exclusion) skip = true;
        if (skip) continue;
        mx = std::max(mx, std::abs(v[static_cast<size_t>(i)] - fn(t[static_cast<size_t>(i)])));
    }
    return mx;
}

/// Worst per-frequency relative amplitude difference between two series.
double rel_coeff_diff(const HarmonicSeries& x, const HarmonicSeries& y) {
    double worst = std::abs(x.const_coeff() - y.const_coeff()) /
                   std::max(std::abs(x.const_coeff()), 1e-30);
    auto scan = [&](const HarmonicSeries& a, const HarmonicSeries& b) {
        for (std::size_t i = 0; i < a.term_count(); ++i) {
            const auto ta = HarmonicSeries::Term{a.freqs()[i], a.cos_amps()[i], a.sin_amps()[i]};
            const auto tb = b.term(ta.freq);
            const double scale =
                std::max({std::abs(ta.cos_amp), std::abs(ta.sin_amp), 1e-30});
            worst = std::max(worst, std::abs(ta.cos_amp - tb.cos_amp) / scale);
            worst = std::max(worst, std::abs(ta.sin_amp - tb.sin_amp) / scale);
        }
    };
    scan(x, y);
    scan(y, x);
    return worst;
}

struct SuiteBuilder {
    Report report;
    void add(std::string name, double residual, double tolerance) {
        report.checks.push_back({std::move(name), residual, tolerance,
                                 residual <= tolerance});
    }
};

void check_interpolation(SuiteBuilder& suite, const Options& options) {
    const double tol = 1e-8;
    struct Dataset {
        std::string label;
        int node_count;
        std::function<double(double)> fn;  // null -> options.data
    };
    std::vector<Dataset> datasets;
    datasets.push_back({"data", static_cast<int>(options.data.size()), nullptr});
    for (int node_count : {5, 9, 13}) {
        datasets.push_back({"cos", node_count, [](double t) { return std::cos(t); }});
        datasets.push_back({"sin2", node_count, [](double t) { return std::sin(2 * t); }});
    }
    for (const Dataset& ds : datasets) {
        double worst = 0.0;
        for (int i2 = 0; i2 <= 1; ++i2) {
            const UniformGrid grid = make_grid(GridId(i2), ds.node_count);
            const SampleSet samples = attach_samples(
                grid, ds.fn ? sample_function(grid, ds.fn) : options.data);
            std::vector<double> at_nodes(static_cast<size_t>(grid.size()));
            for (int i1 = 0; i1 <= 1; ++i1)
                for (int r = 0; r <= 5; ++r) {
                    const SplineConfig config{GridId(i1), GridId(i2), r, ds.node_count,
                                              {options.terms}};
                    const HarmonicSeries st = build_spline(config, samples);
                    st.eval_many(grid.nodes(), at_nodes);
                    for (int i = 0; i < grid.size(); ++i)
                        worst = std::max(worst,
                                         std::abs(at_nodes[static_cast<size_t>(i)] -
                                                  samples.value(i)));
                }
        }
        suite.add("interpolation/" + ds.label + "[N=" + std::to_string(ds.node_count) + "]",
                  worst, tol);
    }
}

void check_normalization(SuiteBuilder& suite, const Options& options) {
    const int node_count = 9;
    const int n = (node_count - 1) / 2;
    double worst_coeff_br = 0.0, worst_coeff_star = 0.0;
    for (int r = 0; r <= 3; ++r) {
        worst_coeff_br = std::max(
            worst_coeff_br,
            std::abs(build_bspline_first_kind(r, node_count, {options.terms})
                         .integrate_period() - 1.0));
        for (int i1 = 0; i1 <= 1; ++i1)
            for (int i2 = 0; i2 <= 1; ++i2)
                worst_coeff_star = std::max(
                    worst_coeff_star,
                    std::abs(build_bspline_second_kind(GridId(i1), GridId(i2), r,
                                                       node_count, {options.terms})
                                 .integrate_period() - 1.0));
    }
    suite.add("normalization/BR-coefficient", worst_coeff_br, 1e-14);
    suite.add("normalization/BR*-coefficient", worst_coeff_star, 1e-14);

    // Quadrature cross-check at the largest truncation the 4096-point
    // trapezoid can integrate exactly (max frequency below points/2).
    const int points = 4096;
    const std::int64_t quad_terms = (points / 2 - 1 - n) / node_count;
    auto trapezoid = [&](const HarmonicSeries& s) {
        std::vector<double> t(static_cast<size_t>(points));
        std::vector<double> v(static_cast<size_t>(points));
        for (int i = 0; i < points; ++i)
            t[static_cast<size_t>(i)] = 2.0 * kPi * i / points;
        s.eval_many(t, v);
        double acc = 0.0;
        for (double x : v) acc += x;
        return acc * 2.0 * kPi / points;
    };
    double worst_quad_br = 0.0, worst_quad_star = 0.0;
    for (int r = 0; r <= 3; ++r) {
        worst_quad_br = std::max(
            worst_quad_br,
            std::abs(trapezoid(build_bspline_first_kind(r, node_count, {quad_terms})) -
                     1.0));
        for (int i1 = 0; i1 <= 1; ++i1)
            for (int i2 = 0; i2 <= 1; ++i2)
                worst_quad_star = std::max(
                    worst_quad_star,
                    std::abs(trapezoid(build_bspline_second_kind(
                                 GridId(i1), GridId(i2), r, node_count, {quad_terms})) -
                             1.0));
    }
    suite.add("normalization/BR-quadrature", worst_quad_br, 1e-6);
    suite.add("normalization/BR*-quadrature", worst_quad_star, 1e-6);
}

void check_convolution(SuiteBuilder& suite, const Options& options) {
    const int node_count = static_cast<int>(options.data.size());
    double worst_first = 0.0, worst_second = 0.0;
    for (int i1 = 0; i1 <= 1; ++i1)
        for (int i2 = 0; i2 <= 1; ++i2) {
            const UniformGrid grid = make_grid(GridId(i2), node_count);
            const SampleSet samples = attach_samples(grid, options.data);
            for (int r : {1, 2, 3}) {
                const SplineConfig config{GridId(i1), GridId(i2), r, node_count,
                                          {options.terms}};
                const HarmonicSeries direct = build_spline(config, samples);
                worst_first = std::max(
                    worst_first,
                    rel_coeff_diff(direct, spline_via_convolution_first(config, samples)));
                worst_second = std::max(
                    worst_second,
                    rel_coeff_diff(direct, spline_via_convolution_second(config, samples)));
            }
        }
    suite.add("convolution/first-kind-coefficients", worst_first, 1e-10);
    suite.add("convolution/second-kind-coefficients", worst_second, 1e-10);

    // Quadrature spot check at a small truncation so the stated point count
    // covers the band limit.
    const Truncation small{30};
    double worst_quad = 0.0;
    {
        const UniformGrid grid0 = make_grid(GridId(0), node_count);
        const SampleSet samples0 = attach_samples(grid0, options.data);
        const UniformGrid grid1 = make_grid(GridId(1), node_count);
        const SampleSet samples1 = attach_samples(grid1, options.data);

        struct Route {
            HarmonicSeries kernel, bspline, combined;
        };
        const SplineConfig first_cfg{GridId(0), GridId(0), 1, node_count, small};
        const SplineConfig second_cfg{GridId(0), GridId(1), 2, node_count, small};
        Route routes[2] = {
            {build_kernel_first_kind(first_cfg, samples0),
             build_bspline_first_kind(0, node_count, small),
             spline_via_convolution_first(first_cfg, samples0)},
            {build_kernel_second_kind(GridId(0), GridId(1), KernelParity::even, samples1,
                                      small),
             build_bspline_second_kind(GridId(0), GridId(1), 1, node_count, small),
             spline_via_convolution_second(second_cfg, samples1)}};
        for (const Route& route : routes) {
            const int points =
                2 * (static_cast<int>(route.kernel.max_freq()) +
                     static_cast<int>(route.bspline.max_freq())) + 2;
            for (int i = 0; i < 64; ++i) {
                const double t = 2.0 * kPi * i / 64;
                const double via_quad =
                    oracles::quadrature_convolve(route.kernel, route.bspline, t, points);
                worst_quad = std::max(worst_quad,
                                      std::abs(via_quad - route.combined.eval(t)));
            }
        }
    }
    suite.add("convolution/quadrature", worst_quad, 1e-9);
}

void check_identities(SuiteBuilder& suite, const Options& options) {
    const int node_count = static_cast<int>(options.data.size());
    const UniformGrid grid0 = make_grid(GridId(0), node_count);
    const UniformGrid grid1 = make_grid(GridId(1), node_count);
    const SampleSet s0 = attach_samples(grid0, options.data);
    const SampleSet s1 = attach_samples(grid1, options.data);
    const double tol = 1e-3;

    const IdentityReport matched =
        verify_identities(s0, s1, {1, 2}, {options.terms}, tol, options.sup_samples);
    for (const IdentityCheck& c : matched.checks)
        suite.add("identities/" + c.name, c.residual, c.tolerance);

    // Truncation sweep: chain member rebuilt at a smaller truncation against
    // the fully resolved partners; the residual must fall as terms grow.
    const double half_step = 0.5 * grid_step(node_count);
    const Truncation full{options.terms};
    const HarmonicSeries even_partners[3] = {
        shift(build_kernel_second_kind(GridId(1), GridId(1), KernelParity::even, s1, full),
              half_step),
        build_kernel_second_kind(GridId(1), GridId(0), KernelParity::odd, s0, full),
        shift(build_kernel_second_kind(GridId(0), GridId(1), KernelParity::odd, s1, full),
              half_step)};
    const HarmonicSeries odd_partners[3] = {
        shift(build_kernel_second_kind(GridId(1), GridId(1), KernelParity::odd, s1, full),
              half_step),
        build_kernel_second_kind(GridId(1), GridId(0), KernelParity::even, s0, full),
        shift(build_kernel_second_kind(GridId(0), GridId(1), KernelParity::even, s1, full),
              half_step)};

    std::vector<std::int64_t> sweep;
    for (std::int64_t m : {options.terms / 100, options.terms / 10, options.terms})
        if (m >= 1 && (sweep.empty() || sweep.back() != m)) sweep.push_back(m);

    std::vector<double> residuals;
    for (std::int64_t terms : sweep) {
        const Truncation trunc{terms};
        const HarmonicSeries even_head =
            build_kernel_second_kind(GridId(0), GridId(0), KernelParity::even, s0, trunc);
        const HarmonicSeries odd_head =
            build_kernel_second_kind(GridId(0), GridId(0), KernelParity::odd, s0, trunc);
        double res = 0.0;
        for (const HarmonicSeries& p : even_partners)
            res = std::max(res, sup_diff(even_head, p, options.sup_samples));
        for (const HarmonicSeries& p : odd_partners)
            res = std::max(res, sup_diff(odd_head, p, options.sup_samples));
        suite.report.trend.push_back({"identities/chain", terms, res});
        residuals.push_back(res);
    }
    // Residuals below 1e-12 are rounding noise (the matched-truncation
    // identities are exact); the monotonicity ratio is taken above that floor.
    double worst_ratio = 0.0;
    for (std::size_t i = 1; i < residuals.size(); ++i)
        worst_ratio = std::max(worst_ratio, std::max(residuals[i], 1e-12) /
                                                std::max(residuals[i - 1], 1e-12));
    suite.add("identities/trend-monotone", worst_ratio, 2.0);
}

void check_bspline_oracle(SuiteBuilder& suite, const Options& options) {
    const int node_count = 9;
    const double h = grid_step(node_count);
    const Truncation trunc{options.terms};
    auto oracle = [&](int degree) {
        return [degree, h](double t) {
            return oracles::eval_cardinal_bspline({degree, h}, t);
        };
    };
    suite.add("bspline-oracle/degree-1",
              sup_vs_function(build_bspline_first_kind(1, node_count, trunc), oracle(1),
                              -kPi, kPi, 2000),
              1e-3);
    suite.add("bspline-oracle/degree-3",
              sup_vs_function(build_bspline_first_kind(3, node_count, trunc), oracle(3),
                              -kPi, kPi, 2000),
              1e-4);
    suite.add("bspline-oracle/degree-0",
              sup_vs_function(build_bspline_first_kind(0, node_count, trunc), oracle(0),
                              -kPi, kPi, 2000, h / 4, {-h / 2, h / 2}),
              1e-2);
}

void check_polyspline_oracle(SuiteBuilder& suite, const Options& options) {
    const int node_count = static_cast<int>(options.data.size());
    const UniformGrid grid = make_grid(GridId(0), node_count);
    const SampleSet samples = attach_samples(grid, options.data);
    const Truncation trunc{options.terms};

    const auto broken =
        oracles::build_periodic_spline(oracles::PolySplineKind::linear, samples);
    const auto cubic =
        oracles::build_periodic_spline(oracles::PolySplineKind::cubic, samples);
    const SplineConfig linear_cfg{GridId(0), GridId(0), 1, node_count, trunc};
    const SplineConfig cubic_cfg{GridId(0), GridId(0), 3, node_count, trunc};
    suite.add("polyspline-oracle/linear",
              sup_vs_function(build_spline(linear_cfg, samples),
                              [&](double t) { return broken.eval(t); }, 0.0, 2.0 * kPi,
                              2000),
              1e-3);
    suite.add("polyspline-oracle/cubic",
              sup_vs_function(build_spline(cubic_cfg, samples),
                              [&](double t) { return cubic.eval(t); }, 0.0, 2.0 * kPi,
                              2000),
              1e-3);
}

void check_multiplier_algebra(SuiteBuilder& suite) {
    double worst = 0.0;
    for (int node_count : {5, 9, 13})
        for (int x = 1; x <= 200; ++x)
            for (int alpha = -1; alpha <= 4; ++alpha)
                for (int beta = -1; beta <= 4; ++beta) {
                    const double lhs =
                        sigma(x, alpha, node_count) * sigma(x, beta, node_count);
                    const double rhs = sigma(x, alpha + beta + 1, node_count);
                    const double scale = std::max(std::abs(rhs), 1e-300);
                    if (lhs == 0.0 && rhs == 0.0) continue;
                    worst = std::max(worst, std::abs(lhs - rhs) / scale);
                }
    suite.add("multiplier-algebra/composition", worst, 1e-14);

    double parity_gap = 0.0;
    const Truncation trunc{2000};
    for (int node_count : {5, 9, 13})
        for (int r = 0; r <= 3; ++r) {
            const auto mixed_a = multiplier_table(GridId(0), GridId(1), r, node_count, trunc);
            const auto mixed_b = multiplier_table(GridId(1), GridId(0), r, node_count, trunc);
            const auto same_a = multiplier_table(GridId(0), GridId(0), r, node_count, trunc);
            const auto same_b = multiplier_table(GridId(1), GridId(1), r, node_count, trunc);
            for (int k = 1; k <= (node_count - 1) / 2; ++k) {
                parity_gap = std::max(parity_gap,
                                      std::abs(mixed_a.value(k) - mixed_b.value(k)));
                parity_gap = std::max(parity_gap,
                                      std::abs(same_a.value(k) - same_b.value(k)));
            }
        }
    suite.add("multiplier-algebra/parity-exact", parity_gap, 0.0);
}

void check_degenerate_constant(SuiteBuilder& suite, const Options& options) {
    const int node_count = 9;
    const double value = 3.0;
    const Truncation trunc{options.terms};
    double worst = 0.0;
    auto probe = [&](const HarmonicSeries& s) {
        for (int i = 0; i < 64; ++i)
            worst = std::max(worst, std::abs(s.eval(2.0 * kPi * i / 64) - value));
    };
    for (int i1 = 0; i1 <= 1; ++i1)
        for (int i2 = 0; i2 <= 1; ++i2) {
            const UniformGrid grid = make_grid(GridId(i2), node_count);
            const SampleSet samples =
                attach_samples(grid, std::vector<double>(static_cast<size_t>(node_count),
                                                         value));
            probe(build_kernel_second_kind(GridId(i1), GridId(i2), KernelParity::even,
                                           samples, trunc));
            probe(build_kernel_second_kind(GridId(i1), GridId(i2), KernelParity::odd,
                                           samples, trunc));
            for (int r = 0; r <= 3; ++r) {
                const SplineConfig config{GridId(i1), GridId(i2), r, node_count, trunc};
                probe(build_spline(config, samples));
                probe(build_kernel_first_kind(config, samples));
                if (r >= 1) {
                    probe(spline_via_convolution_first(config, samples));
                    probe(spline_via_convolution_second(config, samples));
                }
            }
        }
    suite.add("degenerate-constant/all-objects", worst, 1e-12);
}

void check_transform(SuiteBuilder& suite, const Options& options) {
    double worst_exact = 0.0;
    for (int node_count : {5, 9, 13}) {
        const int n = (node_count - 1) / 2;
        for (int variant = 0; variant <= 1; ++variant) {
            const UniformGrid grid = make_grid(GridId(variant), node_count);
            for (int k = 1; k <= n; ++k)
                for (bool use_sin : {false, true}) {
                    const SampleSet samples = attach_samples(
                        grid, sample_function(grid, [&](double t) {
                            return use_sin ? std::sin(k * t) : std::cos(k * t);
                        }));
                    const TrigPolyCoeffs coeffs = compute_coeffs(samples);
                    for (int j = 0; j <= n; ++j) {
                        double expect_a = (!use_sin && j == k) ? 1.0 : 0.0;
                        worst_exact = std::max(worst_exact,
                                               std::abs(coeffs.a(j) - expect_a));
                        if (j >= 1) {
                            double expect_b = (use_sin && j == k) ? 1.0 : 0.0;
                            worst_exact = std::max(worst_exact,
                                                   std::abs(coeffs.b(j) - expect_b));
                        }
                    }
                }
        }
    }
    suite.add("transform/pure-harmonic-exactness", worst_exact, 1e-12);

    double worst_interp = 0.0;
    auto interp_residual = [&](const SampleSet& samples) {
        const TrigPolyCoeffs coeffs = compute_coeffs(samples);
        for (int i = 0; i < samples.grid().size(); ++i)
            worst_interp = std::max(worst_interp,
                                    std::abs(eval_poly(coeffs, samples.grid().node(i)) -
                                             samples.value(i)));
    };
    {
        const UniformGrid grid = make_grid(GridId(0), static_cast<int>(options.data.size()));
        interp_residual(attach_samples(grid, options.data));
    }
    for (int node_count : {5, 9, 13})
        for (int variant = 0; variant <= 1; ++variant) {
            const UniformGrid grid = make_grid(GridId(variant), node_count);
            interp_residual(attach_samples(grid, sample_function(grid, [](double t) {
                return std::exp(std::sin(t));
            })));
        }
    suite.add("transform/node-interpolation", worst_interp, 1e-10);
}

}  // namespace

bool Report::all_pass() const {
    for (const CheckRow& c : checks)
        if (!c.pass) return false;
    return true;
}

const std::vector<std::pair<std::string, std::string>>& criterion_groups() {
    static const std::vector<std::pair<std::string, std::string>> groups = {
        {"interpolation", "spline interpolates every data set at the grid nodes"},
        {"normalization", "B-splines of both kinds have unit integral"},
        {"convolution", "kernel (x) B-spline convolutions rebuild the spline"},
        {"identities", "second-kind kernel equality chains incl. half-step shift"},
        {"bspline-oracle", "BR coincides with polynomial cardinal B-splines"},
        {"polyspline-oracle", "St(0,0,r) matches periodic polynomial splines"},
        {"multiplier-algebra", "sigma composition law and H parity symmetry"},
        {"degenerate-constant", "constant data stays constant end to end"},
        {"transform", "discrete trigonometric transform exactness"},
    };
    return groups;
}

Report run_suite(const Options& options) {
    if (options.data.size() < 3 || options.data.size() % 2 == 0)
        fail(ErrorCode::length_mismatch, "verification data must have odd length >= 3");
    SuiteBuilder suite;
    suite.report.terms = options.terms;
    suite.report.eval_kernel = kernels::dispatch_name();
    check_interpolation(suite, options);
    check_normalization(suite, options);
    check_convolution(suite, options);
    check_identities(suite, options);
    check_bspline_oracle(suite, options);
    check_polyspline_oracle(suite, options);
    check_multiplier_algebra(suite);
    check_degenerate_constant(suite, options);
    check_transform(suite, options);
    return suite.report;
}

}  // namespace trigbs::verify
