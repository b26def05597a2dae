#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "trigbs/harmonic.hpp"
#include "trigbs/oracles.hpp"

using namespace trigbs;

namespace {
constexpr double kPi = std::numbers::pi;

HarmonicSeries pure_cos(std::uint32_t freq, double amp = 1.0) {
    return HarmonicSeries(0.0, {{freq, amp, 0.0}});
}
HarmonicSeries pure_sin(std::uint32_t freq, double amp = 1.0) {
    return HarmonicSeries(0.0, {{freq, 0.0, amp}});
}

HarmonicSeries random_series(std::uint32_t max_freq, int terms, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> freq(1, max_freq);
    std::vector<HarmonicSeries::Term> out;
    for (int i = 0; i < terms; ++i) out.push_back({freq(rng), amp(rng), amp(rng)});
    return HarmonicSeries(amp(rng), std::move(out));
}
}  // namespace

TEST_CASE("eval basics") {
    const HarmonicSeries s(2.0, {{1, 1.0, 0.0}});
    CHECK(s.eval(0.0) == doctest::Approx(2.0).epsilon(1e-15));
    const HarmonicSeries empty(3.0, {});
    CHECK(empty.eval(1.234) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(empty.eval(-7.0) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("terms accumulate and near-zero pairs are dropped") {
    const HarmonicSeries s(0.0, {{3, 1.0, 0.0}, {3, 2.0, 0.5}, {7, 0.0, 0.0}});
    CHECK(s.term_count() == 1);
    CHECK(s.term(3).cos_amp == 3.0);
    CHECK(s.term(3).sin_amp == 0.5);
    CHECK(s.term(7).cos_amp == 0.0);
    CHECK(s.max_freq() == 3);
    CHECK_THROWS_AS(HarmonicSeries(0.0, {{0, 1.0, 0.0}}), Error);
}

TEST_CASE("convolution of constants") {
    // f == 1 and g == 1 convolve to the constant 2*pi
    const HarmonicSeries one = HarmonicSeries::constant(1.0);
    const HarmonicSeries conv = convolve(one, one);
    CHECK(conv.term_count() == 0);
    CHECK(conv.eval(0.3) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
}

TEST_CASE("convolution of matched harmonics against the quadrature oracle") {
    for (std::uint32_t w : {1u, 3u, 17u}) {
        const HarmonicSeries cc = convolve(pure_cos(w), pure_cos(w));
        const HarmonicSeries cs = convolve(pure_cos(w), pure_sin(w));
        CHECK(cc.term(w).cos_amp == doctest::Approx(kPi).epsilon(1e-14));
        CHECK(std::abs(cc.term(w).sin_amp) < 1e-14);
        CHECK(cs.term(w).sin_amp == doctest::Approx(kPi).epsilon(1e-14));
        CHECK(std::abs(cs.term(w).cos_amp) < 1e-14);
        const int points = 2 * static_cast<int>(2 * w) + 4;
        for (double t : {0.0, 0.71, 3.9}) {
            CHECK(oracles::quadrature_convolve(pure_cos(w), pure_cos(w), t, points) ==
                  doctest::Approx(kPi * std::cos(w * t)).epsilon(1e-12));
            CHECK(oracles::quadrature_convolve(pure_cos(w), pure_sin(w), t, points) ==
                  doctest::Approx(kPi * std::sin(w * t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("convolution commutes and is frequency-diagonal") {
    const HarmonicSeries a = random_series(60, 25, 11);
    const HarmonicSeries b = random_series(60, 25, 12);
    const HarmonicSeries ab = convolve(a, b);
    const HarmonicSeries ba = convolve(b, a);
    CHECK(std::abs(ab.const_coeff() - ba.const_coeff()) < 1e-14);
    REQUIRE(ab.term_count() == ba.term_count());
    for (std::size_t i = 0; i < ab.term_count(); ++i) {
        CHECK(ab.freqs()[i] == ba.freqs()[i]);
        CHECK(std::abs(ab.cos_amps()[i] - ba.cos_amps()[i]) < 1e-14);
        CHECK(std::abs(ab.sin_amps()[i] - ba.sin_amps()[i]) < 1e-14);
    }
    // frequencies present in only one operand vanish
    const HarmonicSeries lone = convolve(pure_cos(1), pure_cos(2));
    CHECK(lone.term_count() == 0);
}

TEST_CASE("convolution matches the trapezoid integral for random series") {
    const HarmonicSeries a = random_series(200, 40, 21);
    const HarmonicSeries b = random_series(200, 40, 22);
    const HarmonicSeries conv = convolve(a, b);
    const int points = 2 * static_cast<int>(a.max_freq() + b.max_freq()) + 2;
    for (double t : {0.0, 0.5, 2.5, 6.0}) {
        const double direct = oracles::quadrature_convolve(a, b, t, points);
        CHECK(std::abs(direct - conv.eval(t)) <
              1e-9 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("convolution against a pure cosine scales term-wise by pi*c") {
    const HarmonicSeries a = random_series(50, 20, 31);
    std::vector<HarmonicSeries::Term> cosine_terms;
    for (std::size_t i = 0; i < a.term_count(); ++i)
        cosine_terms.push_back({a.freqs()[i], 0.25 * (1.0 + static_cast<double>(i % 3)), 0.0});
    const HarmonicSeries c(0.0, std::move(cosine_terms));
    const HarmonicSeries conv = convolve(a, c);
    for (std::size_t i = 0; i < a.term_count(); ++i) {
        const double scale = kPi * c.term(a.freqs()[i]).cos_amp;
        CHECK(conv.term(a.freqs()[i]).cos_amp ==
              doctest::Approx(scale * a.cos_amps()[i]).epsilon(1e-14));
        CHECK(conv.term(a.freqs()[i]).sin_amp ==
              doctest::Approx(scale * a.sin_amps()[i]).epsilon(1e-14));
    }
}

TEST_CASE("shift identities") {
    const HarmonicSeries f = random_series(40, 15, 41);
    const HarmonicSeries same = shift(f, 0.0);
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        CHECK(same.cos_amps()[i] == f.cos_amps()[i]);
        CHECK(same.sin_amps()[i] == f.sin_amps()[i]);
    }
    const HarmonicSeries wrapped = shift(f, 2.0 * kPi);
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        CHECK(std::abs(wrapped.cos_amps()[i] - f.cos_amps()[i]) < 1e-12);
        CHECK(std::abs(wrapped.sin_amps()[i] - f.sin_amps()[i]) < 1e-12);
    }

    const HarmonicSeries quarter = shift(pure_cos(1), kPi / 2);
    CHECK(std::abs(quarter.term(1).cos_amp) < 1e-15);
    CHECK(quarter.term(1).sin_amp == doctest::Approx(-1.0).epsilon(1e-15));

    std::mt19937 rng(55);
    std::uniform_real_distribution<double> dist(-8.0, 8.0);
    for (int i = 0; i < 100; ++i) {
        const double t = dist(rng), s = dist(rng);
        CHECK(std::abs(shift(f, s).eval(t) - f.eval(t + s)) < 1e-12);
    }

    const HarmonicSeries back = shift(shift(f, 1.1), -1.1);
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        CHECK(std::abs(back.cos_amps()[i] - f.cos_amps()[i]) < 1e-13);
        CHECK(std::abs(back.sin_amps()[i] - f.sin_amps()[i]) < 1e-13);
    }
}

TEST_CASE("integrate_period") {
    CHECK(HarmonicSeries(1.0 / kPi, {{2, 0.3, 0.1}}).integrate_period() ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(HarmonicSeries().integrate_period() == 0.0);
}

TEST_CASE("linear_combine") {
    const HarmonicSeries a = random_series(30, 12, 61);
    const ScaledSeries cancel[] = {{1.0, &a}, {-1.0, &a}};
    const HarmonicSeries zero = linear_combine(cancel);
    CHECK(zero.term_count() == 0);
    CHECK(zero.const_coeff() == 0.0);

    const HarmonicSeries c1 = pure_cos(1);
    const ScaledSeries doubled[] = {{2.0, &c1}};
    CHECK(linear_combine(doubled).term(1).cos_amp == 2.0);

    const ScaledSeries halves[] = {{0.5, &a}, {0.5, &a}};
    const HarmonicSeries same = linear_combine(halves);
    std::mt19937 rng(66);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
    for (int i = 0; i < 50; ++i) {
        const double t = dist(rng);
        CHECK(std::abs(same.eval(t) - a.eval(t)) < 1e-13);
    }
}

TEST_CASE("sup_diff") {
    const HarmonicSeries a = random_series(25, 10, 71);
    CHECK(sup_diff(a, a, 100) == 0.0);
    const HarmonicSeries b(a.const_coeff() + 0.5, {});
    const HarmonicSeries a_const(a.const_coeff(), {});
    CHECK(sup_diff(a_const, b, 64) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sup_diff(pure_cos(1), HarmonicSeries(), 1000) ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK_THROWS_AS(sup_diff(a, b, 1), Error);
}

TEST_CASE("JSON round trip is lossless and rejects malformed input") {
    const HarmonicSeries a = random_series(500, 40, 81);
    const HarmonicSeries back = HarmonicSeries::from_json(a.to_json());
    CHECK(back.const_coeff() == a.const_coeff());
    REQUIRE(back.term_count() == a.term_count());
    for (std::size_t i = 0; i < a.term_count(); ++i) {
        CHECK(back.freqs()[i] == a.freqs()[i]);
        CHECK(back.cos_amps()[i] == a.cos_amps()[i]);
        CHECK(back.sin_amps()[i] == a.sin_amps()[i]);
    }
    CHECK_THROWS_AS(HarmonicSeries::from_json("{"), Error);
    CHECK_THROWS_AS(HarmonicSeries::from_json("{\"const\": 1}"), Error);
    CHECK_THROWS_AS(HarmonicSeries::from_json("{\"const\": 1, \"terms\": [[0,1,2]]}"),
                    Error);
    CHECK_THROWS_AS(HarmonicSeries::from_json("{\"const\": 1, \"terms\": [[1,2]]}"), Error);
}
