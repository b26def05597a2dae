// Uniform periodic grids on [0, 2pi) and sample data attached to them.
//
// Two interleaved families of N = 2n+1 equally spaced nodes are used
// throughout:
//   variant 0:  t_i = 2*pi*(i-1)/N      (first node at 0)
//   variant 1:  t_i = pi*(2*i-1)/N      (first node at pi/N, the midpoints)
// Shifting variant 0 by half a step h/2 = pi/N gives variant 1.
#ifndef TRIGBS_GRID_HPP
#define TRIGBS_GRID_HPP

#include <span>
#include <vector>

#include "trigbs/error.hpp"

namespace trigbs {

// Grid family selector; doubles as the stitching-grid / interpolation-grid
// index of a spline configuration.
class GridId {
  public:
    explicit GridId(int value) : value_(value) {
        if (value != 0 && value != 1)
            fail(ErrorCode::bad_grid_variant, "grid variant must be 0 or 1");
    }
    int value() const noexcept { return value_; }
    friend bool operator==(GridId a, GridId b) { return a.value_ == b.value_; }

  private:
    int value_;
};

class UniformGrid {
  public:
    UniformGrid(GridId variant, int node_count);

    GridId variant() const noexcept { return variant_; }
    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    int harmonics() const noexcept { return (size() - 1) / 2; }  // n with N = 2n+1
    double node(int i) const { return nodes_.at(static_cast<size_t>(i)); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    double step() const noexcept;

  private:
    GridId variant_;
    std::vector<double> nodes_;
};

class SampleSet {
  public:
    SampleSet(UniformGrid grid, std::vector<double> values);

    const UniformGrid& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    double value(int i) const { return values_.at(static_cast<size_t>(i)); }

  private:
    UniformGrid grid_;
    std::vector<double> values_;
};

UniformGrid make_grid(GridId variant, int node_count);

/// Uniform spacing 2*pi/N shared by both grid variants.
double grid_step(int node_count);

SampleSet attach_samples(const UniformGrid& grid, std::vector<double> values);

}  // namespace trigbs

#endif
