#include "sdde/path.hpp"

#include <cmath>
#include <string>

#include "sdde/errors.hpp"
#include "sdde/rng.hpp"

namespace sdde {

double Path::interpolate(double t, int comp) const {
    if (times.empty()) throw BadGrid("Path::interpolate: empty path");
    const double t0 = times.front();
    const double h = step();
    if (times.size() == 1 || h == 0.0) {
        if (std::abs(t - t0) > 1e-9) throw BadGrid("Path::interpolate: time outside grid");
        return value(0, comp);
    }
    const double u = (t - t0) / h;
    const double rounded = std::round(u);
    if (std::abs(u - rounded) < 1e-9) {
        const int i = static_cast<int>(rounded);
        if (i < 0 || i >= size()) throw BadGrid("Path::interpolate: time outside grid");
        return value(i, comp);
    }
    const int i = static_cast<int>(std::floor(u));
    if (i < 0 || i + 1 >= size()) throw BadGrid("Path::interpolate: time outside grid");
    const double w = u - i;
    return (1.0 - w) * value(i, comp) + w * value(i + 1, comp);
}

int WienerGrid::index_of(double t) const {
    const double u = (t - t_start) / h;
    const double rounded = std::round(u);
    if (std::abs(u - rounded) > 1e-6)
        throw BadGrid("WienerGrid: time " + std::to_string(t) + " is not a grid node");
    const int i = static_cast<int>(rounded);
    if (i < 0 || i > steps) throw BadGrid("WienerGrid: time outside grid");
    return i;
}

WienerGrid build_wiener(std::uint64_t seed, double t_start, double t_end, double h, int channels) {
    if (!(h > 0.0)) throw BadGrid("build_wiener: h must be positive");
    if (!(t_start < t_end)) throw BadGrid("build_wiener: need t_start < t_end");
    if (channels < 1) throw BadGrid("build_wiener: need at least one channel");
    const double raw_steps = (t_end - t_start) / h;
    const double rounded = std::round(raw_steps);
    if (std::abs(raw_steps - rounded) > 1e-6 * std::max(1.0, rounded))
        throw BadGrid("build_wiener: h does not divide the interval");

    WienerGrid grid;
    grid.seed = seed;
    grid.t_start = t_start;
    grid.t_end = t_end;
    grid.h = h;
    grid.steps = static_cast<int>(rounded);
    grid.channels = channels;
    grid.inc.resize(static_cast<std::size_t>(grid.steps) * channels);

    const double sqrt_h = std::sqrt(h);
    for (int j = 0; j < channels; ++j) {
        Philox4x32 rng = rng_stream(seed, StreamPurpose::wiener, static_cast<std::uint32_t>(j));
        for (int i = 0; i < grid.steps; ++i)
            grid.inc[static_cast<std::size_t>(i) * channels + j] = sqrt_h * rng.next_gaussian();
    }
    return grid;
}

}  // namespace sdde
