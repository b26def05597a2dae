#include "trigbs/oracles.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace trigbs::oracles {

namespace {

// Thomas algorithm for a tridiagonal system with the given constant
// diagonals; bands and rhs sized n.  Overwrites nothing; returns solution.
std::vector<double> solve_tridiagonal(std::vector<double> diag,
                                      std::vector<double> lower,
                                      std::vector<double> upper,
                                      std::vector<double> rhs) {
    const size_t n = diag.size();
    for (size_t i = 1; i < n; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
    return x;
}

// Cyclic tridiagonal solve (constant bands a=lower, b=diag, c=upper with the
// wrap-around corners) via the Sherman-Morrison rank-one correction.
std::vector<double> solve_cyclic_tridiagonal(double lower, double diag, double upper,
                                             std::vector<double> rhs) {
    const size_t n = rhs.size();
    const double gamma = -diag;
    std::vector<double> d(n, diag), lo(n, lower), up(n, upper);
    d[0] = diag - gamma;
    d[n - 1] = diag - lower * upper / gamma;
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = upper;  // correction vector u; v = (1, 0, ..., lower/gamma)
    std::vector<double> y = solve_tridiagonal(d, lo, up, rhs);
    std::vector<double> q = solve_tridiagonal(d, lo, up, u);
    const double vy = y[0] + (lower / gamma) * y[n - 1];
    const double vq = 1.0 + q[0] + (lower / gamma) * q[n - 1];
    if (std::abs(vq) < 1e-300)
        fail(ErrorCode::degenerate_multiplier, "cyclic tridiagonal system is singular");
    const double factor = vy / vq;
    for (size_t i = 0; i < n; ++i) y[i] -= factor * q[i];
    return y;
}

}  // namespace

double eval_cardinal_bspline(const CardinalBSpline& shape, double t) {
    const int d = shape.degree;
    if (d < 0 || d > 10)
        fail(ErrorCode::bad_spline_order, "cardinal B-spline degree must be in 0..10");
    if (shape.step <= 0.0)
        fail(ErrorCode::bad_format, "cardinal B-spline step must be positive");
    // Shift to knots 0..d+1 with unit spacing and run the Cox-de Boor
    // triangle upward from the degree-0 indicators.
    const double x = t / shape.step + 0.5 * (d + 1);
    if (x < 0.0 || x >= d + 1) return 0.0;
    std::vector<double> v(static_cast<size_t>(d) + 1, 0.0);
    for (int j = 0; j <= d; ++j)
        v[static_cast<size_t>(j)] = (x >= j && x < j + 1) ? 1.0 : 0.0;
    for (int p = 1; p <= d; ++p)
        for (int j = 0; j <= d - p; ++j)
            v[static_cast<size_t>(j)] =
                (x - j) / p * v[static_cast<size_t>(j)] +
                (j + p + 1 - x) / p * v[static_cast<size_t>(j) + 1];
    return v[0] / shape.step;
}

PeriodicPolySpline::PeriodicPolySpline(PolySplineKind kind, SampleSet samples)
    : kind_(kind), samples_(std::move(samples)) {
    if (samples_.grid().variant().value() != 0)
        fail(ErrorCode::grid_mismatch, "periodic spline oracle expects grid variant 0");
    if (kind_ == PolySplineKind::cubic) {
        const int n = samples_.grid().size();
        const double h = samples_.grid().step();
        std::vector<double> rhs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double prev = samples_.value((i + n - 1) % n);
            const double next = samples_.value((i + 1) % n);
            rhs[static_cast<size_t>(i)] =
                (next - 2.0 * samples_.value(i) + prev) / (h * h);
        }
        moments_ = solve_cyclic_tridiagonal(1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0, rhs);
    }
}

double PeriodicPolySpline::eval(double t) const {
    const int n = samples_.grid().size();
    const double h = samples_.grid().step();
    double tr = std::fmod(t, 2.0 * std::numbers::pi);
    if (tr < 0.0) tr += 2.0 * std::numbers::pi;
    int i = static_cast<int>(tr / h);
    if (i >= n) i = n - 1;
    const double t0 = samples_.grid().node(i);
    const int j = (i + 1) % n;
    if (kind_ == PolySplineKind::linear) {
        const double u = (tr - t0) / h;
        return samples_.value(i) + (samples_.value(j) - samples_.value(i)) * u;
    }
    const double left = t0 + h - tr;
    const double right = tr - t0;
    const double mi = moments_[static_cast<size_t>(i)];
    const double mj = moments_[static_cast<size_t>(j)];
    return mi * left * left * left / (6.0 * h) + mj * right * right * right / (6.0 * h) +
           (samples_.value(i) - mi * h * h / 6.0) * left / h +
           (samples_.value(j) - mj * h * h / 6.0) * right / h;
}

PeriodicPolySpline build_periodic_spline(PolySplineKind kind, SampleSet samples) {
    return PeriodicPolySpline(kind, std::move(samples));
}

double quadrature_convolve(const HarmonicSeries& a, const HarmonicSeries& b, double t,
                           int points) {
    const int band = 2 * (static_cast<int>(a.max_freq()) + static_cast<int>(b.max_freq())) + 2;
    if (points < band)
        fail(ErrorCode::insufficient_points,
             "quadrature needs >= " + std::to_string(band) + " points, got " +
                 std::to_string(points));
    std::vector<double> v(static_cast<size_t>(points));
    std::vector<double> shifted(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) {
        v[static_cast<size_t>(i)] = 2.0 * std::numbers::pi * i / points;
        shifted[static_cast<size_t>(i)] = t - v[static_cast<size_t>(i)];
    }
    std::vector<double> fa(static_cast<size_t>(points));
    std::vector<double> fb(static_cast<size_t>(points));
    a.eval_many(shifted, fa);
    b.eval_many(v, fb);
    double acc = 0.0;
    for (int i = 0; i < points; ++i)
        acc += fa[static_cast<size_t>(i)] * fb[static_cast<size_t>(i)];
    return acc * 2.0 * std::numbers::pi / points;
}

}  // namespace trigbs::oracles
