// Interpolating trigonometric polynomial on a uniform odd-count grid.
//
// For N = 2n+1 samples f_j at nodes t_j the coefficients
//   a_k = (2/N) sum_j f_j cos(k t_j)   (k = 0..n)
//   b_k = (2/N) sum_j f_j sin(k t_j)   (k = 1..n)
// define T(t) = a_0/2 + sum_k a_k cos(kt) + b_k sin(kt), which reproduces the
// samples exactly (odd N makes the discrete transform square and invertible).
#ifndef TRIGBS_TRIGPOLY_HPP
#define TRIGBS_TRIGPOLY_HPP

#include <span>
#include <vector>

#include "trigbs/grid.hpp"

namespace trigbs {

class TrigPolyCoeffs {
  public:
    TrigPolyCoeffs(GridId grid_id, std::vector<double> a, std::vector<double> b);

    GridId grid_id() const noexcept { return grid_id_; }
    int harmonics() const noexcept { return static_cast<int>(b_.size()); }  // n
    /// a_k for k = 0..n
    double a(int k) const { return a_.at(static_cast<size_t>(k)); }
    /// b_k for k = 1..n
    double b(int k) const { return b_.at(static_cast<size_t>(k - 1)); }
    std::span<const double> a_all() const noexcept { return a_; }
    std::span<const double> b_all() const noexcept { return b_; }

  private:
    GridId grid_id_;
    std::vector<double> a_;  // a_0 .. a_n
    std::vector<double> b_;  // b_1 .. b_n
};

/// Discrete Fourier coefficients of the samples, compensated summation.
TrigPolyCoeffs compute_coeffs(const SampleSet& samples);

double eval_poly(const TrigPolyCoeffs& coeffs, double t);

}  // namespace trigbs

#endif
