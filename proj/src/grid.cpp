#include "trigbs/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace trigbs {

namespace {

void check_node_count(int node_count) {
    if (node_count < 3)
        fail(ErrorCode::node_count_too_small,
             "node count must be at least 3, got " + std::to_string(node_count));
    if (node_count % 2 == 0)
        fail(ErrorCode::even_node_count,
             "node count must be odd (N = 2n+1), got " + std::to_string(node_count));
}

}  // namespace

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::even_node_count: return "even_node_count";
        case ErrorCode::node_count_too_small: return "node_count_too_small";
        case ErrorCode::bad_grid_variant: return "bad_grid_variant";
        case ErrorCode::length_mismatch: return "length_mismatch";
        case ErrorCode::non_finite_value: return "non_finite_value";
        case ErrorCode::grid_mismatch: return "grid_mismatch";
        case ErrorCode::bad_truncation: return "bad_truncation";
        case ErrorCode::bad_spline_order: return "bad_spline_order";
        case ErrorCode::degenerate_multiplier: return "degenerate_multiplier";
        case ErrorCode::insufficient_points: return "insufficient_points";
        case ErrorCode::bad_format: return "bad_format";
        case ErrorCode::unknown_figure: return "unknown_figure";
    }
    return "unknown";
}

UniformGrid::UniformGrid(GridId variant, int node_count) : variant_(variant) {
    check_node_count(node_count);
    nodes_.resize(static_cast<size_t>(node_count));
    // Nodes come from the closed formula per index, not cumulative addition,
    // so there is no drift and node(0) is exact (0 or pi/N).  Multiplying the
    // rounded half step by the integer index keeps consecutive spacing within
    // one ulp of step() (which equals 2*half exactly).
    const double half = std::numbers::pi / node_count;
    for (int i = 1; i <= node_count; ++i) {
        nodes_[static_cast<size_t>(i - 1)] =
            variant.value() == 0 ? half * (2 * i - 2) : half * (2 * i - 1);
    }
}

double UniformGrid::step() const noexcept {
    // equals 2 * (pi / N) exactly: scaling by 2 commutes with rounding
    return 2.0 * std::numbers::pi / size();
}

SampleSet::SampleSet(UniformGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(grid_.size()))
        fail(ErrorCode::length_mismatch,
             "expected " + std::to_string(grid_.size()) + " sample values, got " +
                 std::to_string(values_.size()));
    for (double v : values_)
        if (!std::isfinite(v))
            fail(ErrorCode::non_finite_value, "sample values must be finite");
}

UniformGrid make_grid(GridId variant, int node_count) {
    return UniformGrid(variant, node_count);
}

double grid_step(int node_count) {
    check_node_count(node_count);
    return 2.0 * std::numbers::pi / node_count;
}

SampleSet attach_samples(const UniformGrid& grid, std::vector<double> values) {
    return SampleSet(grid, std::move(values));
}

}  // namespace trigbs
