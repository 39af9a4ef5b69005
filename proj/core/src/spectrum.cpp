#include "sdde/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <fftw3.h>

#include "sdde/errors.hpp"

namespace sdde {

Spectrum spectrum_periodogram(const Path& path, double h, int component, int segment_length) {
    if (segment_length < 8 || (segment_length & (segment_length - 1)) != 0)
        throw std::invalid_argument("spectrum_periodogram: segment length must be a power of two >= 8");
    if (!(h > 0.0)) throw std::invalid_argument("spectrum_periodogram: h must be positive");
    const int n = path.size();
    const int L = segment_length;
    if (n < L)
        throw PathTooShort("spectrum_periodogram: path has " + std::to_string(n) +
                           " samples, need at least " + std::to_string(L));

    const int hop = L / 2;
    const int n_segments = (n - L) / hop + 1;
    const int n_bins = L / 2 + 1;

    std::vector<double> window(L);
    double window_power = 0.0;
    for (int t = 0; t < L; ++t) {
        window[t] = 0.5 * (1.0 - std::cos(2.0 * M_PI * t / L));
        window_power += window[t] * window[t];
    }

    std::vector<double> in(L);
    std::vector<std::complex<double>> out(n_bins);
    fftw_plan plan = fftw_plan_dft_r2c_1d(L, in.data(),
                                          reinterpret_cast<fftw_complex*>(out.data()),
                                          FFTW_ESTIMATE);

    std::vector<double> accum(n_bins, 0.0);
    for (int s = 0; s < n_segments; ++s) {
        const int offset = s * hop;
        double mean = 0.0;
        for (int t = 0; t < L; ++t) mean += path.value(offset + t, component);
        mean /= L;
        for (int t = 0; t < L; ++t) in[t] = (path.value(offset + t, component) - mean) * window[t];
        fftw_execute(plan);
        for (int b = 0; b < n_bins; ++b) accum[b] += std::norm(out[b]);
    }
    fftw_destroy_plan(plan);

    // Normalized so that sum(power) * domega = variance for white input.
    const double scale = h / (2.0 * M_PI * window_power * n_segments);
    Spectrum spec;
    spec.omega.resize(n_bins);
    spec.power.resize(n_bins);
    for (int b = 0; b < n_bins; ++b) {
        spec.omega[b] = 2.0 * M_PI * b / (L * h);
        spec.power[b] = accum[b] * scale;
    }
    return spec;
}

double lorentzian_psd(double tau, double omega) {
    const double inv_tau2 = 1.0 / (tau * tau);
    return inv_tau2 / (2.0 * M_PI * (omega * omega + inv_tau2));
}

double white_psd(double h) { return h / (2.0 * M_PI); }

namespace {

double lorentzian_sse(std::span<const double> omega, std::span<const double> power, double corner) {
    // For fixed corner the amplitude has a closed-form least-squares value.
    const double c2 = corner * corner;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        const double g = 1.0 / (omega[i] * omega[i] + c2);
        num += power[i] * g;
        den += g * g;
    }
    const double amp = den > 0.0 ? num / den : 0.0;
    double sse = 0.0;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        const double r = power[i] - amp / (omega[i] * omega[i] + c2);
        sse += r * r;
    }
    return sse;
}

}  // namespace

double fit_lorentzian_corner(std::span<const double> omega, std::span<const double> power) {
    if (omega.size() != power.size() || omega.size() < 4)
        throw std::invalid_argument("fit_lorentzian_corner: need matched spectra, length >= 4");
    double lo = omega.front();
    double hi = omega.back();
    if (!(lo > 0.0)) throw std::invalid_argument("fit_lorentzian_corner: omega must be positive");

    // Coarse scan on a log grid, then golden-section refinement.
    const int grid = 256;
    double best = lo, best_sse = lorentzian_sse(omega, power, lo);
    const double ratio = std::log(hi / lo);
    for (int i = 1; i <= grid; ++i) {
        const double c = lo * std::exp(ratio * i / grid);
        const double sse = lorentzian_sse(omega, power, c);
        if (sse < best_sse) {
            best_sse = sse;
            best = c;
        }
    }
    double a = best / std::exp(ratio / grid);
    double b = best * std::exp(ratio / grid);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = lorentzian_sse(omega, power, x1), f2 = lorentzian_sse(omega, power, x2);
    for (int it = 0; it < 80 && (b - a) > 1e-12 * b; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = lorentzian_sse(omega, power, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = lorentzian_sse(omega, power, x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace sdde
