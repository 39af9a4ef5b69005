#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdde/delay.hpp"
#include "sdde/limit.hpp"
#include "sdde/model.hpp"
#include "sdde/noise.hpp"
#include "sdde/path.hpp"

namespace sdde {

/// One trial of the coupled experiment: the delayed system and the
/// limiting SDE (drift kind `exact`) are driven by one Wiener grid built
/// on [t_minus, T] from `seed`, and the sup over [0, T] of the Euclidean
/// distance between the two paths is returned. An empty x0 means the
/// origin.
double coupled_sup_error(const ModelSpec& model, const DelaySchedule& sched, std::uint64_t seed,
                         double h, double T, const Vec& x0 = {});

struct ConvergenceRow {
    double eps = 0.0;
    double p_hat = 0.0;  // fraction of trials with sup error > a
    double wilson_lo = 0.0;
    double wilson_hi = 1.0;
    double mean_sup_err = 0.0;
    double se = 0.0;
};

struct ConvergenceReport {
    double a = 0.0;
    int trials = 0;
    std::vector<ConvergenceRow> rows;  // one per eps, in the given order
};

/// Exceedance probabilities P[sup > a] and mean sup errors over a strictly
/// decreasing eps schedule; trial t uses seed base_seed + t, identically
/// across eps values (common random numbers).
ConvergenceReport convergence_experiment(const ModelSpec& model, const DelaySchedule& sched_template,
                                         std::span<const double> eps_list, int trials, double a,
                                         double T, std::uint64_t base_seed, double h_ratio = 100.0,
                                         const Vec& x0 = {});

struct FalsificationResult {
    double eps = 0.0;
    double mean_err_exact = 0.0;
    double se_exact = 0.0;
    double mean_err_taylor = 0.0;
    double se_taylor = 0.0;
    double t_stat = 0.0;      // paired t for H1: err_exact < err_taylor
    double p_one_sided = 1.0;
    int trials = 0;
};

/// Couples the delayed system against limiting equations with the exact
/// and the Taylor drift on identical Wiener grids, trial by trial.
FalsificationResult drift_falsification(const ModelSpec& model, const DelaySchedule& sched,
                                        int trials, double T, std::uint64_t base_seed,
                                        double h_ratio = 100.0, const Vec& x0 = {});

/// sup over [0, T] of |G_t| where G_t is the running centered integral
/// of k_j eps y_j(u) y_l(u - c_p eps).
double g_process_sup(const DelaySchedule& sched, int j, int l, int p, double T, double h,
                     std::uint64_t seed);

/// (1/T) integral over [0, T] of k_j eps y_j(u) y_l(u - c_p eps); converges
/// to psi(j, l, p) for long T.
double psi_time_average(const DelaySchedule& sched, int j, int l, int p, double T, double h,
                        std::uint64_t seed);

struct MomentEstimate {
    double estimate = 0.0;
    double se = 0.0;
    int trials = 0;
};

/// Monte Carlo estimate of E[sup_{[0,T]} || eps y ||^2] for stationary noise.
MomentEstimate eps_y_sup_moment(const DelaySchedule& sched, double T, int trials,
                                std::uint64_t base_seed, double h_ratio = 100.0);

struct GStatRow {
    double eps = 0.0;
    double estimate = 0.0;  // E[ sup |G|^2 ]
    double se = 0.0;
};

struct GStatReport {
    int j = 0, l = 0, p = 0;
    std::vector<GStatRow> rows;
};

/// E[sup |G|^2] across an eps schedule, `trials` runs each.
GStatReport g_stat_experiment(const DelaySchedule& sched_template, int j, int l, int p,
                              std::span<const double> eps_list, int trials, double T,
                              std::uint64_t base_seed, double h_ratio = 100.0);

/// Stationary OU realization sampled at step h via the exact transition.
Path ou_exact_chain(const OUParams& params, double h, int n_samples, std::uint64_t seed);

/// Unit-variance white samples (Wiener increments scaled by 1/sqrt(h)).
Path white_noise_chain(double h, int n_samples, std::uint64_t seed);

struct Fig1Result {
    Path ou_driven;
    Path white_driven;
};

/// One realization of the scalar system f(x) = a x, sigma(x) = b x + c with
/// no delay, driven by OU noise with correlation time tau, next to the
/// plain Ito integration on the same Wiener grid.
Fig1Result fig1_realizations(double a, double b, double c, double tau, double T, double h,
                             std::uint64_t seed);

}  // namespace sdde
