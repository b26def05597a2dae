// Error codes and the exception type shared by the whole library.
#ifndef TRIGBS_ERROR_HPP
#define TRIGBS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trigbs {

enum class ErrorCode {
    even_node_count,        // N must be odd (N = 2n+1)
    node_count_too_small,   // N must be >= 3
    bad_grid_variant,       // grid id outside {0,1}
    length_mismatch,        // sample vector length != N
    non_finite_value,       // NaN/Inf in input data
    grid_mismatch,          // samples attached to the wrong grid for an operation
    bad_truncation,         // truncation order < 1
    bad_spline_order,       // r < 0, or a convolution route asked for r = 0
    degenerate_multiplier,  // |H_k| below inversion threshold
    insufficient_points,    // quadrature point count below the band limit
    bad_format,             // malformed JSON / CSV input
    unknown_figure,         // figure id outside 1..9
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

// Shorthand used by validation paths.
[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace trigbs

#endif
