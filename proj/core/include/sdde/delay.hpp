#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sdde/model.hpp"
#include "sdde/noise.hpp"
#include "sdde/path.hpp"

namespace sdde {

/// Componentwise delays delta_i = c_i * eps and correlation times
/// tau_j = k_j * eps, tied to one scale parameter eps.
struct DelaySchedule {
    std::vector<double> c;  // per state component, >= 0
    std::vector<double> k;  // per noise channel, > 0
    double eps = 0.0;

    double delta(int i) const { return c[i] * eps; }
    double tau(int j) const { return k[j] * eps; }
    double max_delta() const;
    double min_tau() const;
    std::vector<double> taus() const;

    /// Throws on nonpositive eps/k or negative c.
    void validate() const;

    /// Same coefficients at a different scale.
    DelaySchedule with_eps(double new_eps) const { return {c, k, new_eps}; }
};

/// Prescribed trajectory on [t_minus, 0] needed to start the delay
/// equation; x0 caches x_past(0).
struct PastCondition {
    double t_minus = 0.0;
    std::function<Vec(double)> x_past;
    Vec x0;

    static PastCondition constant(Vec x0, double t_minus);
};

/// Stationary-start noise history: y(t_minus) ~ N(0, 1/(2 tau_j)) per
/// channel (drawn from rng), evolved to 0 by shared-increment Euler
/// steps against the Wiener grid.
Path sample_past_noise(const DelaySchedule& sched, double t_minus, const WienerGrid& wiener,
                       Philox4x32& rng);

/// Componentwise delayed state ((x(t - c_1 eps))_1, ..., (x(t - c_m eps))_m),
/// reading past.x_past for negative arguments and linearly interpolating
/// between grid nodes otherwise.
Vec delayed_lookup(const Path& x_path, const PastCondition& past, double t,
                   std::span<const double> c, double eps);

struct SddeResult {
    Path x;  // on [0, T]
    Path y;  // on [t_minus, T]
};

/// Explicit Euler integration of
///   x_{t+h} = x_t + f(x_t) h + sigma(x_{t-delta}) y_t h
/// with the OU noise advanced by shared-increment Euler steps on the same
/// Wiener grid. The grid must cover [past.t_minus, T] with step h; the
/// stationary initial noise draw is keyed off wiener.seed, so the result
/// is a deterministic function of (model, sched, past, wiener, h).
SddeResult integrate_sdde(const ModelSpec& model, const DelaySchedule& sched,
                          const PastCondition& past, const WienerGrid& wiener, double h);

}  // namespace sdde
