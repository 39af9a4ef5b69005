#pragma once

#include <span>
#include <vector>

#include "sdde/rng.hpp"

namespace sdde {

/// Correlation-time parameters of one Ornstein-Uhlenbeck noise channel,
/// tau = k * eps. The process solves dy = -(1/tau) y dt + (1/tau) dW and
/// its stationary law is N(0, 1/(2 tau)).
struct OUParams {
    double k;
    double eps;
    double tau;

    OUParams(double k_coeff, double scale);
};

/// Current colored-noise vector and its time.
struct NoiseState {
    std::vector<double> y;
    double t = 0.0;
};

/// Draw from the stationary law N(0, 1/(2 tau)).
double ou_stationary_sample(const OUParams& params, Philox4x32& rng);

/// All channels drawn from their stationary laws at time t.
NoiseState stationary_noise_state(std::span<const double> taus, double t, Philox4x32& rng);

/// Distributionally exact OU transition over a step of length h:
/// y' = e^{-h/tau} y + sqrt((1 - e^{-2h/tau}) / (2 tau)) z, z ~ N(0,1).
double ou_step_exact(double y, double h, double tau, double z);

/// Euler step sharing the Wiener increment with a coupled integrator:
/// y_j' = y_j - (h/tau_j) y_j + dW_j / tau_j.
/// Throws StepTooLarge unless h <= min(taus)/10.
std::vector<double> ou_step_shared(std::span<const double> y, double h, std::span<const double> taus,
                                   std::span<const double> dW);

/// In-place variant used inside integration loops.
void ou_step_shared_inplace(std::span<double> y, double h, std::span<const double> taus,
                            std::span<const double> dW);

/// Stationary autocovariance (1/(2 tau)) e^{-|lag|/tau}.
double ou_autocovariance(double tau, double lag);

/// Closed form for E[| eps * y_j(t) y_l(s) |^2] of two stationary channels
/// with coefficients kj, kl and lag = t - s:
///   1/(4 kj kl) + [same_index] (1/(2 kj^2)) e^{-2|lag|/(kj eps)}.
double wick_product_second_moment(double kj, double kl, bool same_index, double eps, double lag);

/// Psi_{jlp} = E[k_j eps y_j(u) y_l(u - c_p eps)] = (delta_jl / 2) e^{-c_p / k_j}.
double psi(int j, int l, int p, std::span<const double> k, std::span<const double> c);

}  // namespace sdde
