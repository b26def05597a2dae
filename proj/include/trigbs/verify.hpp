// Full structural verification suite: interpolation, normalization,
// convolution representations, kernel identity chains (with truncation
// sweep), coincidence with polynomial B-splines and periodic polynomial
// splines, multiplier algebra, degenerate inputs, and discrete-transform
// exactness.  Every tolerance is pinned here.
#ifndef TRIGBS_VERIFY_HPP
#define TRIGBS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace trigbs::verify {

struct CheckRow {
    std::string name;  // "<group>/<detail>"
    double residual;
    double tolerance;
    bool pass;
};

struct TrendRow {
    std::string name;
    std::int64_t terms;
    double residual;
};

struct Report {
    std::int64_t terms = 0;
    std::string eval_kernel;
    std::vector<CheckRow> checks;
    std::vector<TrendRow> trend;
    bool all_pass() const;
};

struct Options {
    std::int64_t terms = 10000;
    // Sample values attached to both grid variants of the matching odd-N
    // grid; the checks that sweep N use sampled test functions instead.
    std::vector<double> data = {2, 1, 3, 2, 4, 1, 3, 1, 3};
    int sup_samples = 1000;
};

Report run_suite(const Options& options);

/// Group prefixes in the order the acceptance gate reports them.
const std::vector<std::pair<std::string, std::string>>& criterion_groups();

}  // namespace trigbs::verify

#endif
