#pragma once

#include <span>
#include <vector>

#include "sdde/path.hpp"

namespace sdde {

struct Spectrum {
    std::vector<double> omega;  // angular frequency, rad / time unit
    std::vector<double> power;  // two-sided PSD, variance per rad/time
};

/// Welch-averaged periodogram of one path component: Hann-windowed
/// segments with 50% overlap, segment mean removed. Normalized so that
/// integrating power over omega recovers the series variance.
/// Throws PathTooShort if the series is shorter than one segment.
Spectrum spectrum_periodogram(const Path& path, double h, int component = 0,
                              int segment_length = 4096);

/// Two-sided PSD of stationary OU noise: (1/tau^2) / (2 pi (omega^2 + 1/tau^2)).
double lorentzian_psd(double tau, double omega);

/// Two-sided PSD of unit-variance white samples at spacing h: h / (2 pi).
double white_psd(double h);

/// Least-squares fit of A / (omega^2 + omega_c^2) to a spectrum; returns
/// the corner frequency omega_c. The DC bin must be excluded by the caller.
double fit_lorentzian_corner(std::span<const double> omega, std::span<const double> power);

}  // namespace sdde
