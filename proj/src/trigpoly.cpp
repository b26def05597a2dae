#include "trigbs/trigpoly.hpp"

#include <cmath>

namespace trigbs {

namespace {

// Kahan accumulator; the exactness tests on pure harmonics rely on sums of
// N cancelling terms staying at the few-ulp level.
struct Compensated {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

TrigPolyCoeffs::TrigPolyCoeffs(GridId grid_id, std::vector<double> a, std::vector<double> b)
    : grid_id_(grid_id), a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size() + 1)
        fail(ErrorCode::length_mismatch, "coefficient vectors must have sizes n+1 and n");
    for (double v : a_)
        if (!std::isfinite(v)) fail(ErrorCode::non_finite_value, "coefficient not finite");
    for (double v : b_)
        if (!std::isfinite(v)) fail(ErrorCode::non_finite_value, "coefficient not finite");
}

TrigPolyCoeffs compute_coeffs(const SampleSet& samples) {
    const UniformGrid& grid = samples.grid();
    const int count = grid.size();
    const int n = grid.harmonics();
    std::vector<double> a(static_cast<size_t>(n) + 1);
    std::vector<double> b(static_cast<size_t>(n));
    for (int k = 0; k <= n; ++k) {
        Compensated sa, sb;
        for (int j = 0; j < count; ++j) {
            const double phase = k * grid.node(j);
            sa.add(samples.value(j) * std::cos(phase));
            if (k > 0) sb.add(samples.value(j) * std::sin(phase));
        }
        a[static_cast<size_t>(k)] = 2.0 * sa.sum / count;
        if (k > 0) b[static_cast<size_t>(k - 1)] = 2.0 * sb.sum / count;
    }
    return TrigPolyCoeffs(grid.variant(), std::move(a), std::move(b));
}

double eval_poly(const TrigPolyCoeffs& coeffs, double t) {
    double value = 0.5 * coeffs.a(0);
    for (int k = 1; k <= coeffs.harmonics(); ++k)
        value += coeffs.a(k) * std::cos(k * t) + coeffs.b(k) * std::sin(k * t);
    return value;
}

}  // namespace trigbs
