#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "trigbs/trigpoly.hpp"

using namespace trigbs;
namespace {
constexpr double kPi = std::numbers::pi;

std::vector<double> sampled(const UniformGrid& g, double (*fn)(double)) {
    std::vector<double> v(static_cast<size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) v[static_cast<size_t>(i)] = fn(g.node(i));
    return v;
}
}  // namespace

TEST_CASE("constant samples give a0 = 2c and nothing else") {
    for (int variant : {0, 1}) {
        const UniformGrid g = make_grid(GridId(variant), 9);
        const TrigPolyCoeffs c = compute_coeffs(attach_samples(g, std::vector<double>(9, 2.5)));
        CHECK(c.a(0) == doctest::Approx(5.0).epsilon(1e-15));
        // the products c*cos(k t_j) carry their own rounding before the
        // compensated sum sees them, so the floor is a few ulp of |c|
        for (int k = 1; k <= 4; ++k) {
            CHECK(std::abs(c.a(k)) < 1e-14);
            CHECK(std::abs(c.b(k)) < 1e-14);
        }
    }
}

TEST_CASE("cos(t) samples give a unit a_1") {
    const UniformGrid g = make_grid(GridId(0), 9);
    const TrigPolyCoeffs c = compute_coeffs(attach_samples(g, sampled(g, +[](double t) {
        return std::cos(t);
    })));
    CHECK(c.a(1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(c.a(0)) < 1e-12);
    for (int k = 2; k <= 4; ++k) CHECK(std::abs(c.a(k)) < 1e-12);
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(c.b(k)) < 1e-12);
}

TEST_CASE("pure harmonics up to n are recovered exactly on both grids") {
    for (int variant : {0, 1})
        for (int count : {5, 9, 13}) {
            const UniformGrid g = make_grid(GridId(variant), count);
            for (int k = 1; k <= g.harmonics(); ++k) {
                std::vector<double> vc(static_cast<size_t>(count)), vs(static_cast<size_t>(count));
                for (int i = 0; i < count; ++i) {
                    vc[static_cast<size_t>(i)] = std::cos(k * g.node(i));
                    vs[static_cast<size_t>(i)] = std::sin(k * g.node(i));
                }
                const TrigPolyCoeffs cc = compute_coeffs(attach_samples(g, vc));
                const TrigPolyCoeffs cs = compute_coeffs(attach_samples(g, vs));
                for (int j = 0; j <= g.harmonics(); ++j) {
                    CHECK(std::abs(cc.a(j) - (j == k ? 1.0 : 0.0)) < 1e-12);
                    if (j >= 1) {
                        CHECK(std::abs(cc.b(j)) < 1e-12);
                        CHECK(std::abs(cs.a(j)) < 1e-12);
                        CHECK(std::abs(cs.b(j) - (j == k ? 1.0 : 0.0)) < 1e-12);
                    }
                }
            }
        }
}

TEST_CASE("worked-example coefficients and interpolation") {
    const UniformGrid g = make_grid(GridId(0), 9);
    const std::vector<double> data = {2, 1, 3, 2, 4, 1, 3, 1, 3};
    const SampleSet samples = attach_samples(g, data);
    const TrigPolyCoeffs c = compute_coeffs(samples);
    CHECK(c.a(0) == doctest::Approx(40.0 / 9.0).epsilon(1e-14));
    // interpolation at node t_5 = 8*pi/9 reproduces f_5 = 4
    CHECK(eval_poly(c, 8.0 * kPi / 9.0) == doctest::Approx(4.0).epsilon(1e-11));
    for (int i = 0; i < 9; ++i)
        CHECK(std::abs(eval_poly(c, g.node(i)) - data[static_cast<size_t>(i)]) < 1e-10);
}

TEST_CASE("eval of explicit coefficients") {
    // a0 = 2, a1 = 1 at t = 0 gives 1 + 1
    const TrigPolyCoeffs c(GridId(0), {2.0, 1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0});
    CHECK(eval_poly(c, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("coefficients are linear in the samples") {
    const UniformGrid g = make_grid(GridId(1), 9);
    std::mt19937 rng(20240901);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> f(9), h(9), mix(9);
    for (int i = 0; i < 9; ++i) {
        f[static_cast<size_t>(i)] = dist(rng);
        h[static_cast<size_t>(i)] = dist(rng);
    }
    const double alpha = 0.7, beta = -1.3;
    for (int i = 0; i < 9; ++i)
        mix[static_cast<size_t>(i)] =
            alpha * f[static_cast<size_t>(i)] + beta * h[static_cast<size_t>(i)];
    const TrigPolyCoeffs cf = compute_coeffs(attach_samples(g, f));
    const TrigPolyCoeffs ch = compute_coeffs(attach_samples(g, h));
    const TrigPolyCoeffs cm = compute_coeffs(attach_samples(g, mix));
    for (int k = 0; k <= 4; ++k) {
        CHECK(std::abs(cm.a(k) - alpha * cf.a(k) - beta * ch.a(k)) < 1e-13);
        if (k >= 1) CHECK(std::abs(cm.b(k) - alpha * cf.b(k) - beta * ch.b(k)) < 1e-13);
    }
}
