#include "sdde/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sdde/errors.hpp"

namespace sdde {

OUParams::OUParams(double k_coeff, double scale) : k(k_coeff), eps(scale), tau(k_coeff * scale) {
    if (!(k > 0.0) || !(eps > 0.0))
        throw std::invalid_argument("OUParams: k and eps must be positive");
}

double ou_stationary_sample(const OUParams& params, Philox4x32& rng) {
    return rng.next_gaussian() / std::sqrt(2.0 * params.tau);
}

NoiseState stationary_noise_state(std::span<const double> taus, double t, Philox4x32& rng) {
    NoiseState state;
    state.t = t;
    state.y.resize(taus.size());
    for (std::size_t j = 0; j < taus.size(); ++j) {
        if (!(taus[j] > 0.0))
            throw std::invalid_argument("stationary_noise_state: taus must be positive");
        state.y[j] = rng.next_gaussian() / std::sqrt(2.0 * taus[j]);
    }
    return state;
}

double ou_step_exact(double y, double h, double tau, double z) {
    if (!(tau > 0.0)) throw std::invalid_argument("ou_step_exact: tau must be positive");
    if (h < 0.0) throw std::invalid_argument("ou_step_exact: h must be nonnegative");
    const double decay = std::exp(-h / tau);
    const double noise_sd = std::sqrt((1.0 - decay * decay) / (2.0 * tau));
    return decay * y + noise_sd * z;
}

namespace {

void check_shared_step(double h, std::span<const double> taus) {
    const double min_tau = *std::min_element(taus.begin(), taus.end());
    if (h > min_tau / 10.0)
        throw StepTooLarge("ou_step_shared: h = " + std::to_string(h) + " exceeds min(tau)/10 = " +
                           std::to_string(min_tau / 10.0));
}

}  // namespace

void ou_step_shared_inplace(std::span<double> y, double h, std::span<const double> taus,
                            std::span<const double> dW) {
    if (y.size() != taus.size() || y.size() != dW.size())
        throw DimensionMismatch("ou_step_shared: y, taus, dW must have equal length");
    check_shared_step(h, taus);
    for (std::size_t j = 0; j < y.size(); ++j)
        y[j] += -h * y[j] / taus[j] + dW[j] / taus[j];
}

std::vector<double> ou_step_shared(std::span<const double> y, double h, std::span<const double> taus,
                                   std::span<const double> dW) {
    std::vector<double> out(y.begin(), y.end());
    ou_step_shared_inplace(out, h, taus, dW);
    return out;
}

double ou_autocovariance(double tau, double lag) {
    if (!(tau > 0.0)) throw std::invalid_argument("ou_autocovariance: tau must be positive");
    return std::exp(-std::abs(lag) / tau) / (2.0 * tau);
}

double wick_product_second_moment(double kj, double kl, bool same_index, double eps, double lag) {
    if (!(kj > 0.0) || !(kl > 0.0) || !(eps > 0.0))
        throw std::invalid_argument("wick_product_second_moment: scale parameters must be positive");
    double value = 1.0 / (4.0 * kj * kl);
    if (same_index) value += std::exp(-2.0 * std::abs(lag) / (kj * eps)) / (2.0 * kj * kj);
    return value;
}

double psi(int j, int l, int p, std::span<const double> k, std::span<const double> c) {
    if (j < 0 || l < 0 || j >= static_cast<int>(k.size()) || l >= static_cast<int>(k.size()))
        throw DimensionMismatch("psi: noise index out of range");
    if (p < 0 || p >= static_cast<int>(c.size()))
        throw DimensionMismatch("psi: state index out of range");
    if (!(k[j] > 0.0) || c[p] < 0.0)
        throw std::invalid_argument("psi: need k[j] > 0 and c[p] >= 0");
    if (j != l) return 0.0;
    return 0.5 * std::exp(-c[p] / k[j]);
}

}  // namespace sdde
