// Command-line front end: build splines/kernels/B-splines as CSV curves with
// JSON series sidecars, reproduce the figure data sets, and run the
// verification suite.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigbs/grid.hpp"
#include "trigbs/harmonic.hpp"
#include "trigbs/oracles.hpp"
#include "trigbs/splinecore.hpp"
#include "trigbs/trigpoly.hpp"
#include "trigbs/verify.hpp"

namespace {

using namespace trigbs;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const std::vector<double> kDemoData = {2, 1, 3, 2, 4, 1, 3, 1, 3};

struct DataFlags {
    std::string inline_values;
    std::string file;
    std::string function;
};

std::vector<double> parse_inline_values(const std::string& text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string field = text.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            fail(ErrorCode::bad_format, "--data: cannot parse '" + field + "' as a number");
        }
        pos = next + 1;
    }
    if (values.empty()) fail(ErrorCode::bad_format, "--data: no values given");
    return values;
}

double named_function(const std::string& name, double t) {
    if (name == "constant") return 3.0;
    if (name == "cos") return std::cos(t);
    if (name == "sin2") return std::sin(2.0 * t);
    if (name == "ramp")
        return std::sin(t) - 0.3 * std::sin(2.0 * t) + 0.1 * std::sin(3.0 * t);
    fail(ErrorCode::bad_format,
         "--fn: unknown function '" + name + "' (constant, cos, sin2, ramp)");
}

int count_sources(const DataFlags& flags) {
    return (flags.inline_values.empty() ? 0 : 1) + (flags.file.empty() ? 0 : 1) +
           (flags.function.empty() ? 0 : 1);
}

// Resolves the sample values for a command.  node_count_flag is the --N value;
// a data file overrides it, inline data must agree with it.
std::vector<double> resolve_values(const DataFlags& flags, int& node_count,
                                   GridId attach_to) {
    if (!flags.file.empty()) {
        std::ifstream in(flags.file);
        if (!in) fail(ErrorCode::bad_format, "--data-file: cannot open " + flags.file);
        nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("N") || !j.contains("values") ||
            !j["N"].is_number_integer() || !j["values"].is_array())
            fail(ErrorCode::bad_format,
                 "--data-file: expected {\"N\": int, \"values\": [..]}");
        node_count = j["N"].get<int>();
        std::vector<double> values;
        for (const auto& v : j["values"]) {
            if (!v.is_number()) fail(ErrorCode::bad_format, "--data-file: non-numeric value");
            values.push_back(v.get<double>());
        }
        return values;
    }
    if (!flags.inline_values.empty()) {
        std::vector<double> values = parse_inline_values(flags.inline_values);
        node_count = static_cast<int>(values.size());
        return values;
    }
    const UniformGrid grid = make_grid(attach_to, node_count);
    std::vector<double> values(static_cast<size_t>(node_count));
    for (int i = 0; i < node_count; ++i)
        values[static_cast<size_t>(i)] = named_function(flags.function, grid.node(i));
    return values;
}

void write_csv_rows(const std::string& path, std::span<const double> t,
                    std::span<const double> value) {
    std::FILE* out = std::fopen(path.c_str(), "wb");
    if (!out) fail(ErrorCode::bad_format, "cannot open output file " + path);
    std::fputs("t,value\n", out);
    for (std::size_t i = 0; i < t.size(); ++i)
        std::fprintf(out, "%.17g,%.17g\n", t[i], value[i]);
    std::fclose(out);
}

void write_series_csv(const std::string& path, const HarmonicSeries& series,
                      int samples_per_period) {
    std::vector<double> t(static_cast<size_t>(samples_per_period));
    std::vector<double> v(static_cast<size_t>(samples_per_period));
    for (int i = 0; i < samples_per_period; ++i)
        t[static_cast<size_t>(i)] = kTwoPi * i / samples_per_period;
    series.eval_many(t, v);
    write_csv_rows(path, t, v);
}

void write_sidecar(const std::string& csv_path, const HarmonicSeries& series) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".json");
    std::ofstream out(p);
    if (!out) fail(ErrorCode::bad_format, "cannot open output file " + p.string());
    out << series.to_json() << "\n";
}

void emit(const std::string& csv_path, const HarmonicSeries& series, int samples) {
    write_series_csv(csv_path, series, samples);
    write_sidecar(csv_path, series);
    std::printf("wrote %s\n", csv_path.c_str());
}

struct CommonFlags {
    int node_count = 9;
    int i1 = 0;
    int i2 = 0;
    int order = 1;
    std::int64_t terms = 10000;
    int samples = 1024;
    std::string out = "out.csv";
    DataFlags data;
};

void add_config_flags(CLI::App* cmd, CommonFlags& flags, bool with_grids = true) {
    cmd->add_option("--N", flags.node_count, "odd node count N = 2n+1");
    if (with_grids) {
        cmd->add_option("--i1", flags.i1, "stitching grid (0 or 1)")
            ->check(CLI::Range(0, 1));
        cmd->add_option("--i2", flags.i2, "interpolation grid (0 or 1)")
            ->check(CLI::Range(0, 1));
    }
    cmd->add_option("--r", flags.order, "spline order r >= 0");
    cmd->add_option("--terms", flags.terms, "truncation order of the aliasing sums");
    cmd->add_option("--samples", flags.samples, "points per period in CSV output");
    cmd->add_option("--out", flags.out, "output CSV path");
}

void add_data_flags(CLI::App* cmd, DataFlags& flags) {
    cmd->add_option("--data", flags.inline_values, "comma-separated sample values");
    cmd->add_option("--data-file", flags.file, "JSON file {\"N\": int, \"values\": [..]}");
    cmd->add_option("--fn", flags.function,
                    "named sample function: constant, cos, sin2, ramp");
}

SampleSet make_samples(const CommonFlags& flags, GridId attach_to, bool required) {
    DataFlags data = flags.data;
    const int sources = count_sources(data);
    if (sources > 1)
        fail(ErrorCode::bad_format, "give exactly one of --data, --data-file, --fn");
    if (sources == 0) {
        if (required)
            fail(ErrorCode::bad_format, "this command needs --data, --data-file or --fn");
        // demo values reproduce the worked example
        int node_count = static_cast<int>(kDemoData.size());
        if (flags.node_count != node_count)
            fail(ErrorCode::bad_format,
                 "--N must be 9 when using the built-in demo data");
        return attach_samples(make_grid(attach_to, node_count), kDemoData);
    }
    int node_count = flags.node_count;
    std::vector<double> values = resolve_values(data, node_count, attach_to);
    return attach_samples(make_grid(attach_to, node_count), std::move(values));
}

int run_build(const CommonFlags& flags) {
    const SampleSet samples = make_samples(flags, GridId(flags.i2), true);
    const SplineConfig config{GridId(flags.i1), GridId(flags.i2), flags.order,
                              samples.grid().size(), Truncation{flags.terms}};
    emit(flags.out, build_spline(config, samples), flags.samples);
    return 0;
}

int run_kernel(const CommonFlags& flags, const std::string& kind,
               const std::string& parity) {
    const SampleSet samples = make_samples(flags, GridId(flags.i2), true);
    HarmonicSeries series;
    if (kind == "first") {
        const SplineConfig config{GridId(flags.i1), GridId(flags.i2), flags.order,
                                  samples.grid().size(), Truncation{flags.terms}};
        series = build_kernel_first_kind(config, samples);
    } else if (kind == "second") {
        if (parity != "even" && parity != "odd")
            fail(ErrorCode::bad_format, "--parity must be even or odd for --kind second");
        series = build_kernel_second_kind(
            GridId(flags.i1), GridId(flags.i2),
            parity == "even" ? KernelParity::even : KernelParity::odd, samples,
            Truncation{flags.terms});
    } else {
        fail(ErrorCode::bad_format, "--kind must be first or second");
    }
    emit(flags.out, series, flags.samples);
    return 0;
}

int run_bspline(const CommonFlags& flags, const std::string& kind) {
    HarmonicSeries series;
    if (kind == "first") {
        series = build_bspline_first_kind(flags.order, flags.node_count,
                                          Truncation{flags.terms});
    } else if (kind == "second") {
        series = build_bspline_second_kind(GridId(flags.i1), GridId(flags.i2), flags.order,
                                           flags.node_count, Truncation{flags.terms});
    } else {
        fail(ErrorCode::bad_format, "--kind must be first or second");
    }
    emit(flags.out, series, flags.samples);
    return 0;
}

void emit_poly_csv(const std::string& path, const TrigPolyCoeffs& coeffs, int samples) {
    std::vector<double> t(static_cast<size_t>(samples));
    std::vector<double> v(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        t[static_cast<size_t>(i)] = kTwoPi * i / samples;
        v[static_cast<size_t>(i)] = eval_poly(coeffs, t[static_cast<size_t>(i)]);
    }
    write_csv_rows(path, t, v);
    std::printf("wrote %s\n", path.c_str());
}

int run_figure(const CommonFlags& flags, int figure_id, const std::string& out_dir) {
    if (figure_id < 1 || figure_id > 9)
        fail(ErrorCode::unknown_figure,
             "figure id must be 1..9, got " + std::to_string(figure_id));
    std::filesystem::create_directories(out_dir);
    const Truncation trunc{flags.terms};
    auto path = [&](const std::string& stem) {
        return (std::filesystem::path(out_dir) / stem).string();
    };
    auto samples_on = [&](int i2) { return make_samples(flags, GridId(i2), false); };
    auto spline_family = [&](int i1, int i2, std::initializer_list<int> orders,
                             bool first_kind_kernels) {
        const SampleSet samples = samples_on(i2);
        for (int r : orders) {
            const SplineConfig config{GridId(i1), GridId(i2), r, samples.grid().size(),
                                      trunc};
            const std::string tag = "_i1" + std::to_string(i1) + "_i2" +
                                    std::to_string(i2) + "_r" + std::to_string(r);
            emit(path("fig" + std::to_string(figure_id) + "_st" + tag + ".csv"),
                 build_spline(config, samples), flags.samples);
            if (first_kind_kernels)
                emit(path("fig" + std::to_string(figure_id) + "_kr" +
                          (r % 2 == 0 ? "0" : "1") + tag + ".csv"),
                     build_kernel_first_kind(config, samples), flags.samples);
        }
    };

    switch (figure_id) {
        case 1:
            for (int i1 = 0; i1 <= 1; ++i1)
                for (int i2 = 0; i2 <= 1; ++i2) {
                    spline_family(i1, i2, {1}, false);
                    emit_poly_csv(path("fig1_tpoly_i1" + std::to_string(i1) + "_i2" +
                                       std::to_string(i2) + "_r1.csv"),
                                  compute_coeffs(samples_on(i2)), flags.samples);
                }
            break;
        case 2:
            for (int r = 0; r <= 3; ++r)
                emit(path("fig2_br_r" + std::to_string(r) + ".csv"),
                     build_bspline_first_kind(r, flags.node_count, trunc), flags.samples);
            break;
        case 3: spline_family(0, 0, {2, 4, 6}, true); break;
        case 4: spline_family(0, 0, {1, 3, 5}, true); break;
        case 5: spline_family(0, 1, {2, 4, 6}, true); break;
        case 6: spline_family(0, 1, {1, 3, 5}, true); break;
        case 7:
            for (int r = 0; r <= 3; ++r)
                emit(path("fig7_brstar_i10_i20_r" + std::to_string(r) + ".csv"),
                     build_bspline_second_kind(GridId(0), GridId(0), r, flags.node_count,
                                               trunc),
                     flags.samples);
            break;
        case 8:
            for (int r = 0; r <= 3; ++r)
                emit(path("fig8_brstar_i11_i20_r" + std::to_string(r) + ".csv"),
                     build_bspline_second_kind(GridId(1), GridId(0), r, flags.node_count,
                                               trunc),
                     flags.samples);
            break;
        case 9: {
            const SampleSet samples = samples_on(0);
            emit(path("fig9_kr0star_i10_i20.csv"),
                 build_kernel_second_kind(GridId(0), GridId(0), KernelParity::even,
                                          samples, trunc),
                 flags.samples);
            emit(path("fig9_kr1star_i10_i20.csv"),
                 build_kernel_second_kind(GridId(0), GridId(0), KernelParity::odd, samples,
                                          trunc),
                 flags.samples);
            break;
        }
        default: break;
    }
    return 0;
}

int run_verify(const CommonFlags& flags, const std::string& report_path) {
    verify::Options options;
    options.terms = flags.terms;
    const int sources = count_sources(flags.data);
    if (sources > 1)
        fail(ErrorCode::bad_format, "give at most one of --data, --data-file, --fn");
    if (sources == 1) {
        int node_count = flags.node_count;
        options.data = resolve_values(flags.data, node_count, GridId(0));
    }
    const verify::Report report = verify::run_suite(options);

    std::printf("eval kernel: %s   terms: %lld\n\n", report.eval_kernel.c_str(),
                static_cast<long long>(report.terms));
    std::printf("%-46s %13s %10s %6s\n", "check", "residual", "tolerance", "result");
    for (const auto& row : report.checks)
        std::printf("%-46s %13.3e %10.1e %6s\n", row.name.c_str(), row.residual,
                    row.tolerance, row.pass ? "pass" : "FAIL");
    if (!report.trend.empty()) {
        std::printf("\ntruncation sensitivity (identity chains, partner at full terms)\n");
        for (const auto& row : report.trend)
            std::printf("  %-30s terms=%-8lld residual=%.3e\n", row.name.c_str(),
                        static_cast<long long>(row.terms), row.residual);
    }
    const bool all_pass = report.all_pass();
    std::printf("\n%s\n", all_pass ? "all checks passed" : "SOME CHECKS FAILED");

    nlohmann::json j;
    j["terms"] = report.terms;
    j["kernel"] = report.eval_kernel;
    j["allPass"] = all_pass;
    j["checks"] = nlohmann::json::array();
    for (const auto& row : report.checks)
        j["checks"].push_back({{"name", row.name},
                               {"residual", row.residual},
                               {"tolerance", row.tolerance},
                               {"pass", row.pass}});
    j["trend"] = nlohmann::json::array();
    for (const auto& row : report.trend)
        j["trend"].push_back(
            {{"name", row.name}, {"terms", row.terms}, {"residual", row.residual}});
    std::ofstream out(report_path);
    if (!out) fail(ErrorCode::bad_format, "cannot open report file " + report_path);
    out << j.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trigonometric interpolation splines, kernels and B-splines"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string kind = "first";
    std::string parity;
    int figure_id = 0;
    std::string out_dir = ".";
    std::string report_path = "verify_report.json";

    CLI::App* build = app.add_subcommand("build", "interpolating spline St as CSV+JSON");
    add_config_flags(build, flags);
    add_data_flags(build, flags.data);

    CLI::App* kernel = app.add_subcommand("kernel", "interpolation kernel as CSV+JSON");
    add_config_flags(kernel, flags);
    add_data_flags(kernel, flags.data);
    kernel->add_option("--kind", kind, "first or second");
    kernel->add_option("--parity", parity, "even or odd (second kind)");

    CLI::App* bspline = app.add_subcommand("bspline", "trigonometric B-spline as CSV+JSON");
    add_config_flags(bspline, flags);
    bspline->add_option("--kind", kind, "first or second");

    CLI::App* figure =
        app.add_subcommand("figure", "emit every curve of one worked-example figure");
    figure->add_option("id,--figure", figure_id, "figure id (1..9)")->required();
    figure->add_option("--N", flags.node_count, "odd node count N = 2n+1");
    figure->add_option("--terms", flags.terms, "truncation order of the aliasing sums");
    figure->add_option("--samples", flags.samples, "points per period in CSV output");
    figure->add_option("--out", out_dir, "output directory");
    add_data_flags(figure, flags.data);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--terms", flags.terms, "truncation order");
    verify_cmd->add_option("--N", flags.node_count, "node count for custom data");
    add_data_flags(verify_cmd, flags.data);
    verify_cmd->add_option("--report", report_path, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return run_build(flags);
        if (kernel->parsed()) return run_kernel(flags, kind, parity);
        if (bspline->parsed()) return run_bspline(flags, kind);
        if (figure->parsed()) return run_figure(flags, figure_id, out_dir);
        if (verify_cmd->parsed()) return run_verify(flags, report_path);
    } catch (const trigbs::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", trigbs::error_code_name(e.code()),
                     e.what());
        return e.code() == trigbs::ErrorCode::degenerate_multiplier ? 3 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
