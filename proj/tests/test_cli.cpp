#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "sdde/config.hpp"
#include "sdde/errors.hpp"
#include "sdde/runner.hpp"

using namespace sdde;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("sdde_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string embedded_config(const std::string& csv_text) {
    std::string out;
    std::istringstream ss(csv_text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.rfind("# ", 0) == 0) out += line.substr(2) + "\n";
    }
    return out;
}

std::vector<std::vector<double>> data_rows(const std::string& csv_text) {
    std::vector<std::vector<double>> rows;
    std::istringstream ss(csv_text);
    std::string line;
    bool header_seen = false;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("minimal config gets defaults") {
    const RunConfig config = parse_config("command = drift-table\n");
    CHECK(config.command == "drift-table");
    CHECK(config.seed == 42);
    CHECK(config.ratios == std::vector<double>{0.0, 0.5, 1.0, 2.0});
    CHECK(config.out == "drift_table.csv");
}

TEST_CASE("CLI fallback command and conflicts") {
    const RunConfig config = parse_config("", "converge");
    CHECK(config.command == "converge");
    CHECK(config.eps_list == std::vector<double>{0.2, 0.1, 0.05, 0.025});
    CHECK(config.trials == 200);

    CHECK_THROWS_AS(parse_config("command = fig1\n", "converge"), ValidationError);
    CHECK_THROWS_AS(parse_config(""), ValidationError);  // no command at all
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_config("command = converge\nbogus_key = 1\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_config("command converge\n"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_AS(parse_config("command = converge\ntrials = 10\ntrials = 20\n"), ParseError);
    CHECK_THROWS_AS(parse_config("command = converge\ntrials = ten\n"), ParseError);
}

TEST_CASE("validation rejects bad schedules and dimensions") {
    CHECK_THROWS_WITH_AS(parse_config("command = converge\neps_list = 0.1, 0.2\n"),
                         doctest::Contains("strictly decreasing"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_config("command = converge\nc = 1\n"),
                         doctest::Contains("DimensionMismatch"), ValidationError);
    CHECK_THROWS_AS(parse_config("command = converge\ntrials = 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("command = spectrum\nnoise = pink\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("command = spectrum\nsegment_length = 1000\n"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_config("command = simulate\nc = 2, 2\neps = 0.05\nt_minus = -0.2\n"),
        doctest::Contains("|t_minus|"), ValidationError);
}

TEST_CASE("config round-trips through its serialization") {
    const std::string texts[] = {
        "command = drift-table\nratios = 0, 0.25, 3\n",
        "command = converge\nmodel = bounded2d\ntrials = 77\na = 0.2\nseed = 9\n",
        "command = spectrum\nnoise = white\nh = 0.25\nsegments = 12\n",
        "command = simulate\nmodel = linear1d\nc = 1\nk = 2\nx0 = 0.5\neps = 0.01\n",
        "command = gstat\nj = 0\nl = 1\nT = 2\n",
    };
    for (const std::string& text : texts) {
        const RunConfig config = parse_config(text);
        const RunConfig reparsed = parse_config(config.to_text());
        CHECK(reparsed.to_kv() == config.to_kv());
    }
}

TEST_CASE("drift-table emits the pinned coefficient values") {
    TempDir dir;
    RunConfig config = parse_config("command = drift-table\n");
    config.out = dir.file("table.csv");
    run(config);
    const auto rows = data_rows(slurp(config.out));
    REQUIRE(rows.size() == 4);
    const double expected[4][3] = {{0.0, 0.5, 0.5},
                                   {0.5, 0.30327, 0.33333},
                                   {1.0, 0.18394, 0.25},
                                   {2.0, 0.06767, 0.16667}};
    for (int i = 0; i < 4; ++i) {
        CHECK(rows[i][0] == expected[i][0]);
        CHECK(std::abs(rows[i][1] - expected[i][1]) < 5e-6);
        CHECK(std::abs(rows[i][2] - expected[i][2]) < 5e-6);
    }
}

TEST_CASE("identical configs produce byte-identical files") {
    TempDir dir;
    RunConfig config = parse_config("command = ydiag\ntrials = 20\neps_list = 0.1, 0.05\n");
    config.out = dir.file("a.csv");
    run(config);
    const std::string first = slurp(config.out);
    config.out = dir.file("b.csv");
    run(config);
    std::string second = slurp(config.out);
    // The embedded config differs only in the out path; normalize it away.
    const std::string a_line = "out = " + dir.file("a.csv");
    const std::string b_line = "out = " + dir.file("b.csv");
    second.replace(second.find(b_line), b_line.size(), a_line);
    CHECK(first == second);
}

TEST_CASE("emitted files round-trip their configuration") {
    TempDir dir;
    RunConfig config = parse_config("command = drift-table\nseed = 123\n");
    config.out = dir.file("t.csv");
    run(config);
    const RunConfig recovered = parse_config(embedded_config(slurp(config.out)));
    CHECK(recovered.to_kv() == config.to_kv());
}

TEST_CASE("fig1 writes both realization files") {
    TempDir dir;
    RunConfig config = parse_config("command = fig1\nT = 2\nh = 0.01\n");
    config.out = dir.file("fig1.csv");
    run(config);
    CHECK(fs::exists(dir.file("fig1_ou.csv")));
    CHECK(fs::exists(dir.file("fig1_white.csv")));
    const auto ou = data_rows(slurp(dir.file("fig1_ou.csv")));
    const auto white = data_rows(slurp(dir.file("fig1_white.csv")));
    REQUIRE(ou.size() == white.size());
    CHECK(ou.size() == 201);
    CHECK(ou[0][1] == 0.0);  // x0 = 0
    CHECK(white[0][1] == 0.0);
}

TEST_CASE("simulate emits state and noise columns") {
    TempDir dir;
    RunConfig config =
        parse_config("command = simulate\nmodel = linear1d\nc = 1\nk = 1\neps = 0.1\nT = 0.5\n");
    config.out = dir.file("sim.csv");
    run(config);
    const std::string text = slurp(config.out);
    CHECK(text.find("t,x_1,y_1") != std::string::npos);
    const auto rows = data_rows(text);
    CHECK(rows.size() == 501);
    CHECK(rows[0][0] == 0.0);
}

TEST_CASE("converge on the default schedule emits a nonincreasing exceedance table") {
    TempDir dir;
    RunConfig config = parse_config("", "converge");
    config.out = dir.file("conv.csv");
    run(config);
    const std::string text = slurp(config.out);
    CHECK(text.find("eps,p_hat,wilson_lo,wilson_hi,mean_sup_err,se") != std::string::npos);
    const auto rows = data_rows(text);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][0] < rows[i - 1][0]);   // eps strictly decreasing
        CHECK(rows[i][1] <= rows[i - 1][1]);  // p_hat nonincreasing
    }
    CHECK(rows.front()[1] > rows.back()[1]);
}

TEST_CASE("exit codes distinguish config, guard, and io failures") {
    std::ostringstream diag;

    RunConfig bad_config = parse_config("command = converge\ntrials = 5\neps_list = 0.1\nT = 0.2\n");
    bad_config.trials = 0;  // invalid, as if built by hand
    CHECK(run_with_exit_code(bad_config, diag) == 1);

    // Passes static validation but trips the integrator step guard:
    // h = eps/10 > min(tau)/10 when min(k) < 1.
    RunConfig guard = parse_config(
        "command = converge\ntrials = 2\neps_list = 0.1\nT = 0.1\nk = 0.5, 0.5\nh_ratio = 10\n");
    TempDir dir;
    guard.out = dir.file("g.csv");
    CHECK(run_with_exit_code(guard, diag) == 2);

    RunConfig io = parse_config("command = drift-table\n");
    io.out = dir.file("missing_dir") + "/x.csv";
    CHECK(run_with_exit_code(io, diag) == 3);

    RunConfig ok = parse_config("command = drift-table\n");
    ok.out = dir.file("ok.csv");
    CHECK(run_with_exit_code(ok, diag) == 0);
}
