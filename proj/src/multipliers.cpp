#include "trigbs/multipliers.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

namespace trigbs {

namespace {

double pow_int(double base, int exponent) {
    double value = 1.0;
    for (int i = 0; i < exponent; ++i) value *= base;
    return value;
}

void check_truncation(const Truncation& trunc) {
    if (trunc.terms < 1)
        fail(ErrorCode::bad_truncation, "truncation order must be >= 1");
}

constexpr double kDegenerateH = 1e-12;

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

std::mutex g_table_mutex;
// key: (parity of r+1+I1+I2, r, N, terms)
std::map<std::tuple<int, int, int, std::int64_t>, std::vector<double>> g_table_cache;

}  // namespace

double sigma(std::int64_t k, int order, int node_count) {
    if (order == -1) return 1.0;  // exponent 0, including at multiples of N
    if (k == 0) return 1.0;
    const std::int64_t q = k / node_count;
    const std::int64_t s = k % node_count;
    if (s == 0) return 0.0;
    // sin(pi k / N) = (-1)^q sin(pi s / N) with s = k mod N; the reduced
    // argument keeps full precision for arbitrarily large k.
    double numerator = std::sin(std::numbers::pi * static_cast<double>(s) / node_count);
    if (q & 1) numerator = -numerator;
    const double denominator = std::numbers::pi * static_cast<double>(k) / node_count;
    return pow_int(numerator, order + 1) / pow_int(denominator, order + 1);
}

double interp_multiplier_terms(int k, int sign_parity, int order, int node_count,
                               std::int64_t terms) {
    const std::int64_t big_n = node_count;
    Compensated acc;
    acc.add(sigma(k, order, node_count));
    auto aliased = [&](std::int64_t m) {
        double term = sigma(m * big_n + k, order, node_count) +
                      sigma(m * big_n - k, order, node_count);
        if (sign_parity && (m & 1)) term = -term;
        return term;
    };
    for (std::int64_t m = 1; m + 1 <= terms; m += 2)
        acc.add(aliased(m) + aliased(m + 1));
    if (terms & 1) acc.add(aliased(terms));
    return acc.sum;
}

double interp_multiplier(int k, GridId stitching, GridId interpolation, int order,
                         int node_count, const Truncation& trunc) {
    check_truncation(trunc);
    const int n = (node_count - 1) / 2;
    if (k < 1 || k > n)
        fail(ErrorCode::bad_spline_order,
             "harmonic index k must be in 1..n, got " + std::to_string(k));
    const int parity = (order + 1 + stitching.value() + interpolation.value()) & 1;
    const double h = interp_multiplier_terms(k, parity, order, node_count, trunc.terms);
    if (std::abs(h) < kDegenerateH)
        fail(ErrorCode::degenerate_multiplier,
             "interpolation multiplier H_" + std::to_string(k) + " is degenerate");
    return h;
}

MultiplierTable multiplier_table(GridId stitching, GridId interpolation, int order,
                                 int node_count, const Truncation& trunc) {
    check_truncation(trunc);
    if (order < 0) fail(ErrorCode::bad_spline_order, "spline order must be >= 0");
    const int n = (node_count - 1) / 2;
    const int parity = (order + 1 + stitching.value() + interpolation.value()) & 1;
    const auto key = std::make_tuple(parity, order, node_count, trunc.terms);

    MultiplierTable table;
    table.stitching = stitching.value();
    table.interpolation = interpolation.value();
    table.order = order;
    table.node_count = node_count;
    table.terms = trunc.terms;

    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        auto it = g_table_cache.find(key);
        if (it != g_table_cache.end()) {
            table.h = it->second;
            return table;
        }
    }

    std::vector<double> h(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        h[static_cast<size_t>(k - 1)] =
            interp_multiplier_terms(k, parity, order, node_count, trunc.terms);
        if (std::abs(h[static_cast<size_t>(k - 1)]) < kDegenerateH)
            fail(ErrorCode::degenerate_multiplier,
                 "interpolation multiplier H_" + std::to_string(k) + " is degenerate");
    }
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        g_table_cache[key] = h;  // idempotent: every writer computes the same table
    }
    table.h = std::move(h);
    return table;
}

double h_tail_bound(int order, int sign_parity, int node_count, std::int64_t terms) {
    const int n = (node_count - 1) / 2;
    const double pi = std::numbers::pi;
    // |sigma_{mN+-k}(r)| <= (N / (pi (mN-n)))^(1+r); both +- terms bounded by
    // the worse one.
    auto term_bound = [&](std::int64_t m) {
        return 2.0 * pow_int(node_count / (pi * (static_cast<double>(m) * node_count - n)),
                             order + 1);
    };
    if (order >= 1) {
        // first term plus integral remainder of the decreasing bound
        const double first = term_bound(terms + 1);
        const double x = (static_cast<double>(terms) + 1) * node_count - n;
        const double integral =
            2.0 * pow_int(node_count / pi, order + 1) /
            (order * node_count * pow_int(x, order));
        return first + integral;
    }
    if (sign_parity == 0) return term_bound(terms + 1);  // alternating tail
    return std::numeric_limits<double>::infinity();      // log-divergent sum
}

}  // namespace trigbs
