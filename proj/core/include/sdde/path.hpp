#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sdde {

/// Trajectory on a uniform time grid. States are stored flat,
/// row-major by time index; dim is the state (or noise) dimension.
struct Path {
    std::vector<double> times;
    int dim = 0;
    std::vector<double> data;  // times.size() * dim

    int size() const { return static_cast<int>(times.size()); }
    double step() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }

    std::span<const double> state(int i) const {
        return {data.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
    std::span<double> state(int i) {
        return {data.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }

    double value(int i, int comp) const { return data[static_cast<std::size_t>(i) * dim + comp]; }

    /// One component at an arbitrary time inside the grid, linearly
    /// interpolated; times landing on a node (within rounding) read the
    /// stored value exactly.
    double interpolate(double t, int comp) const;
};

/// Seeded Brownian increments on a uniform grid; increment(i, j) covers
/// [t_i, t_i + h) for channel j and is N(0, h). Fully determined by
/// (seed, t_start, t_end, h, channels), independent of evaluation order.
struct WienerGrid {
    std::uint64_t seed = 0;
    double t_start = 0.0;
    double t_end = 0.0;
    double h = 0.0;
    int steps = 0;
    int channels = 0;
    std::vector<double> inc;  // steps * channels, row-major by step

    double increment(int step, int ch) const {
        return inc[static_cast<std::size_t>(step) * channels + ch];
    }
    std::span<const double> increments(int step) const {
        return {inc.data() + static_cast<std::size_t>(step) * channels,
                static_cast<std::size_t>(channels)};
    }
    double time(int step) const { return t_start + step * h; }

    /// Grid index whose time is closest to t; throws BadGrid if t is not
    /// a node within rounding tolerance.
    int index_of(double t) const;
};

WienerGrid build_wiener(std::uint64_t seed, double t_start, double t_end, double h, int channels);

}  // namespace sdde
