// End-to-end checks of the command-line tool; the binary path arrives as
// argv[1] from CTest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "trigbs/harmonic.hpp"

namespace {

std::string g_cli;
std::filesystem::path g_tmp;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>&1";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) output += buf;
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Csv {
    std::vector<double> t, value;
};

Csv parse_csv(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "t,value");
    Csv csv;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        csv.t.push_back(std::stod(line.substr(0, comma)));
        csv.value.push_back(std::stod(line.substr(comma + 1)));
    }
    return csv;
}

}  // namespace

TEST_CASE("build writes a reproducible CSV and a lossless sidecar") {
    const auto out = g_tmp / "curve.csv";
    const std::string cmd = "build --N 9 --i1 0 --i2 1 --r 1 --terms 200 --samples 64 "
                            "--data \"2,1,3,2,4,1,3,1,3\" --out " + out.string();
    CHECK(run(cmd).exit_code == 0);
    const Csv csv = parse_csv(out);
    REQUIRE(csv.t.size() == 64);
    for (int i = 0; i < 64; ++i)
        CHECK(csv.t[static_cast<size_t>(i)] ==
              doctest::Approx(2.0 * std::numbers::pi * i / 64).epsilon(1e-15));
    const std::string first = slurp(out);

    const auto sidecar = g_tmp / "curve.json";
    const trigbs::HarmonicSeries series = trigbs::HarmonicSeries::from_json(slurp(sidecar));
    CHECK(series.term_count() > 0);
    // series value at the CSV abscissae reproduces the CSV column
    for (int i = 0; i < 64; i += 7)
        CHECK(series.eval(csv.t[static_cast<size_t>(i)]) ==
              doctest::Approx(csv.value[static_cast<size_t>(i)]).epsilon(1e-12));

    CHECK(run(cmd).exit_code == 0);
    CHECK(slurp(out) == first);  // bit-identical rerun
}

TEST_CASE("build with constant data emits the constant") {
    const auto out = g_tmp / "const.csv";
    CHECK(run("build --N 9 --data \"3,3,3,3,3,3,3,3,3\" --terms 100 --samples 32 --out " +
              out.string()).exit_code == 0);
    for (double v : parse_csv(out).value) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("build validation failures exit with 2") {
    CHECK(run("build --N 8 --data \"1,2,3,4,5,6,7,8\"").exit_code == 2);
    CHECK(run("build --N 9").exit_code == 2);  // no data source
    CHECK(run("build --N 9 --data \"1,1,1,1,1,1,1,1,1\" --fn cos").exit_code == 2);
    CHECK(run("build --N 9 --data \"1,2,oops\"").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("bspline first kind peaks near 1/h") {
    const auto out = g_tmp / "hat.csv";
    CHECK(run("bspline --kind first --r 1 --N 9 --terms 2000 --samples 128 --out " +
              out.string()).exit_code == 0);
    const Csv csv = parse_csv(out);
    double mx = 0.0;
    for (double v : csv.value) mx = std::max(mx, v);
    CHECK(mx == doctest::Approx(9.0 / (2.0 * std::numbers::pi)).epsilon(2e-2));
}

TEST_CASE("bspline second kind and kernels run") {
    CHECK(run("bspline --kind second --i1 1 --i2 0 --r 1 --N 9 --terms 300 --out " +
              (g_tmp / "brstar.csv").string()).exit_code == 0);
    CHECK(run("kernel --kind second --parity even --i1 0 --i2 0 "
              "--data \"2,1,3,2,4,1,3,1,3\" --terms 300 --out " +
              (g_tmp / "kr.csv").string()).exit_code == 0);
    CHECK(run("kernel --kind second --i1 0 --i2 0 --data \"2,1,3,2,4,1,3,1,3\"")
              .exit_code == 2);  // missing parity
    CHECK(run("kernel --kind third --data \"2,1,3,2,4,1,3,1,3\"").exit_code == 2);
}

TEST_CASE("data file input") {
    const auto data = g_tmp / "data.json";
    std::ofstream(data) << "{\"N\": 9, \"values\": [2,1,3,2,4,1,3,1,3]}";
    CHECK(run("build --data-file " + data.string() + " --terms 100 --out " +
              (g_tmp / "fromfile.csv").string()).exit_code == 0);
    CHECK(run("build --fn cos --N 9 --terms 100 --out " +
              (g_tmp / "fromfn.csv").string()).exit_code == 0);
}

TEST_CASE("figure command emits the expected file sets") {
    const auto dir = g_tmp / "fig2";
    CHECK(run("figure 2 --N 9 --terms 100 --samples 32 --out " + dir.string())
              .exit_code == 0);
    for (int r = 0; r <= 3; ++r) {
        CHECK(std::filesystem::exists(dir / ("fig2_br_r" + std::to_string(r) + ".csv")));
        CHECK(std::filesystem::exists(dir / ("fig2_br_r" + std::to_string(r) + ".json")));
    }
    const auto dir1 = g_tmp / "fig1";
    CHECK(run("figure 1 --terms 60 --samples 32 --out " + dir1.string()).exit_code == 0);
    int csv_count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir1))
        if (entry.path().extension() == ".csv") ++csv_count;
    CHECK(csv_count == 8);  // four splines plus four polynomial overlays
    CHECK(run("figure 12").exit_code == 2);
}

TEST_CASE("verify passes on constant data at a moderate truncation") {
    const auto report = g_tmp / "verify_pass.json";
    const RunResult r = run("verify --terms 500 --data \"3,3,3,3,3,3,3,3,3\" --report " +
                            report.string());
    INFO(r.output);
    CHECK(r.exit_code == 0);
    const std::string body = slurp(report);
    CHECK(body.find("\"allPass\": true") != std::string::npos);
}

TEST_CASE("verify reports honest failures at a tiny truncation") {
    const auto report = g_tmp / "verify_fail.json";
    const RunResult r = run("verify --terms 40 --report " + report.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL") != std::string::npos);
    CHECK(slurp(report).find("\"allPass\": false") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
        return 1;
    }
    g_cli = argv[1];
    g_tmp = std::filesystem::temp_directory_path() /
            ("trigbs_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(g_tmp);
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    const int rc = context.run();
    std::filesystem::remove_all(g_tmp);
    return rc;
}
