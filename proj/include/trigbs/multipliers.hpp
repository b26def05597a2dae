// Riemann convergence multipliers sigma_k(r) and the interpolation
// multiplier H_k that renormalizes an aliased trigonometric series so it
// still interpolates.
//
//   sigma_k(r) = (sin(pi k / N) / (pi k / N))^(1+r),   sigma_0(r) = 1,
//   sigma_k(-1) = 1, and sigma vanishes at positive multiples of N.
//
//   H_k(I1,I2,r) = sigma_k(r)
//       + sum_{m>=1} (-1)^(m(r+1+I1+I2)) [sigma_{mN+k}(r) + sigma_{mN-k}(r)]
//
// H depends on (I1,I2) only through the parity of r+1+I1+I2.  Its inverse
// multiplies every data-carrying series, so a near-zero H is rejected.
#ifndef TRIGBS_MULTIPLIERS_HPP
#define TRIGBS_MULTIPLIERS_HPP

#include <cstdint>
#include <vector>

#include "trigbs/error.hpp"
#include "trigbs/grid.hpp"

namespace trigbs {

/// Truncation order for every infinite aliasing sum: m runs 1..terms.
struct Truncation {
    std::int64_t terms = 10000;
    double tail_tol = 0.0;  // advisory target for h_tail_bound; never enforced
};

struct MultiplierTable {
    int stitching = 0;      // I1
    int interpolation = 0;  // I2
    int order = 0;          // r
    int node_count = 0;     // N
    std::int64_t terms = 0;
    std::vector<double> h;  // H_1 .. H_n
    double value(int k) const { return h.at(static_cast<size_t>(k - 1)); }
};

/// sigma_k(r); k >= 0, r >= -1.  Exact 0 at positive multiples of N (r > -1),
/// exact 1 for k = 0 or r = -1.  Evaluated through integer reduction of
/// k mod N so sin(pi k / N) never suffers cancellation for large k.
double sigma(std::int64_t k, int order, int node_count);

/// Partial sum of H_k with m = 1..terms.  Consecutive terms are paired
/// (m odd with m+1) before compensated accumulation; for the alternating
/// parity the raw terms decay like 1/m and pairing restores 1/m^2.
/// terms = 0 is allowed here and returns sigma_k(r) alone.
double interp_multiplier_terms(int k, int sign_parity, int order, int node_count,
                               std::int64_t terms);

/// H_k(I1,I2,r) at truncation trunc.terms.  Throws degenerate_multiplier when
/// |H_k| < 1e-12.
double interp_multiplier(int k, GridId stitching, GridId interpolation, int order,
                         int node_count, const Truncation& trunc);

/// All of H_1..H_n in one call, memoized per (parity, r, N, terms).
/// The memo is a thread-safe last-writer-wins cache; every writer computes
/// identical values.
MultiplierTable multiplier_table(GridId stitching, GridId interpolation, int order,
                                 int node_count, const Truncation& trunc);

/// Upper bound on |H(infinity) - H(terms)|.  Strict for order >= 1 (the tail
/// is absolutely convergent).  For order 0 the combined sign of the terms is
/// (-1)^(m(parity+1)): with sign_parity 0 the series alternates and the
/// first-term bound applies; with sign_parity 1 the partial sums grow like
/// log(terms) and the bound is +infinity (the truncated value is still
/// well defined and is what the matched-truncation series use).
double h_tail_bound(int order, int sign_parity, int node_count, std::int64_t terms);

}  // namespace trigbs

#endif
