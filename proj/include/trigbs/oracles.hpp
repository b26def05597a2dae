// Independent ground-truth implementations used by tests and the verify
// command: polynomial cardinal B-splines, periodic polynomial interpolation
// splines, and quadrature convolution.  Deliberately plain and desk-scale;
// nothing here touches the multiplier or spline-construction code paths.
#ifndef TRIGBS_ORACLES_HPP
#define TRIGBS_ORACLES_HPP

#include <vector>

#include "trigbs/grid.hpp"
#include "trigbs/harmonic.hpp"

namespace trigbs::oracles {

/// Uniform-knot polynomial B-spline of a given degree, centered at 0 and
/// scaled to unit integral (the standard normalized B-spline divided by the
/// knot spacing).  Support is [-(degree+1)h/2, (degree+1)h/2].
struct CardinalBSpline {
    int degree;
    double step;
};

double eval_cardinal_bspline(const CardinalBSpline& shape, double t);

enum class PolySplineKind { linear, cubic };

/// Periodic polynomial interpolation spline through samples on grid
/// variant 0: broken line, or the C2 cubic from the cyclic tridiagonal
/// moment system.
class PeriodicPolySpline {
  public:
    PeriodicPolySpline(PolySplineKind kind, SampleSet samples);

    PolySplineKind kind() const noexcept { return kind_; }
    const SampleSet& samples() const noexcept { return samples_; }
    /// Second-derivative values at the nodes (cubic kind only).
    const std::vector<double>& moments() const noexcept { return moments_; }
    double eval(double t) const;

  private:
    PolySplineKind kind_;
    SampleSet samples_;
    std::vector<double> moments_;
};

PeriodicPolySpline build_periodic_spline(PolySplineKind kind, SampleSet samples);

/// Trapezoid value of the periodic convolution integral of a and b at t.
/// Exact (up to rounding) once points >= 2*(max_freq(a)+max_freq(b)) + 2;
/// fewer points raise insufficient_points.
double quadrature_convolve(const HarmonicSeries& a, const HarmonicSeries& b, double t,
                           int points);

}  // namespace trigbs::oracles

#endif
