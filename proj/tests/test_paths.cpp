#include <cmath>
#include <vector>

#include <doctest.h>

#include "sdde/errors.hpp"
#include "sdde/path.hpp"
#include "sdde/stats.hpp"

using namespace sdde;

TEST_CASE("build_wiener is deterministic in (seed, grid)") {
    const WienerGrid a = build_wiener(42, -0.5, 2.0, 0.01, 2);
    const WienerGrid b = build_wiener(42, -0.5, 2.0, 0.01, 2);
    CHECK(a.steps == 250);
    CHECK(a.inc == b.inc);  // bit-identical
}

TEST_CASE("increment variance matches h within 1%") {
    const double h = 0.003;
    const WienerGrid grid = build_wiener(7, 0.0, 3000.0, h, 1);
    REQUIRE(grid.steps == 1000000);
    const double var = sample_variance(grid.inc);
    CHECK(std::abs(var - h) < 0.01 * h);
}

TEST_CASE("different seeds give uncorrelated increment streams") {
    const int steps = 100000;
    const WienerGrid a = build_wiener(1, 0.0, steps * 0.01, 0.01, 1);
    const WienerGrid b = build_wiener(2, 0.0, steps * 0.01, 0.01, 1);
    std::vector<double> products(steps);
    for (int i = 0; i < steps; ++i) products[i] = a.inc[i] * b.inc[i] / 0.01;
    const MeanSE m = mean_se(products);
    CHECK(std::abs(m.mean) < 3.0 * m.se);
}

TEST_CASE("bad grids are rejected") {
    CHECK_THROWS_AS(build_wiener(0, 1.0, 0.0, 0.1, 1), BadGrid);
    CHECK_THROWS_AS(build_wiener(0, 0.0, 1.0, -0.1, 1), BadGrid);
    CHECK_THROWS_AS(build_wiener(0, 0.0, 1.05, 0.1, 1), BadGrid);  // h does not divide
    CHECK_THROWS_AS(build_wiener(0, 0.0, 1.0, 0.1, 0), BadGrid);
}

TEST_CASE("index_of snaps to nodes and rejects off-grid times") {
    const WienerGrid grid = build_wiener(0, -1.0, 1.0, 0.25, 1);
    CHECK(grid.index_of(-1.0) == 0);
    CHECK(grid.index_of(0.0) == 4);
    CHECK(grid.index_of(1.0) == 8);
    CHECK_THROWS_AS(grid.index_of(0.13), BadGrid);
    CHECK_THROWS_AS(grid.index_of(2.0), BadGrid);
}

TEST_CASE("path interpolation is exact on nodes and for linear data") {
    Path path;
    path.dim = 2;
    const double h = 0.1;
    const int n = 50;
    path.times.resize(n);
    path.data.resize(2 * n);
    const double v0 = 1.5, v1 = -0.75;
    for (int i = 0; i < n; ++i) {
        path.times[i] = i * h;
        path.data[2 * i] = v0 * path.times[i];
        path.data[2 * i + 1] = v1 * path.times[i] + 3.0;
    }

    CHECK(path.interpolate(0.3, 0) == path.value(3, 0));  // node read, no arithmetic
    // linear interpolation reproduces linear trajectories exactly
    for (double t : {0.037, 1.234, 4.811}) {
        CHECK(path.interpolate(t, 0) == doctest::Approx(v0 * t).epsilon(1e-12));
        CHECK(path.interpolate(t, 1) == doctest::Approx(v1 * t + 3.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(path.interpolate(-0.2, 0), BadGrid);
    CHECK_THROWS_AS(path.interpolate(5.0, 0), BadGrid);
}
