#include "sdde/delay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sdde/errors.hpp"

namespace sdde {

double DelaySchedule::max_delta() const {
    double dmax = 0.0;
    for (double ci : c) dmax = std::max(dmax, ci * eps);
    return dmax;
}

double DelaySchedule::min_tau() const {
    double tmin = std::numeric_limits<double>::infinity();
    for (double kj : k) tmin = std::min(tmin, kj * eps);
    return tmin;
}

std::vector<double> DelaySchedule::taus() const {
    std::vector<double> out(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) out[j] = k[j] * eps;
    return out;
}

void DelaySchedule::validate() const {
    if (!(eps > 0.0)) throw ValidationError("DelaySchedule: eps must be positive");
    if (k.empty()) throw ValidationError("DelaySchedule: need at least one noise channel");
    for (double kj : k)
        if (!(kj > 0.0)) throw ValidationError("DelaySchedule: all k entries must be positive");
    for (double ci : c)
        if (ci < 0.0) throw ValidationError("DelaySchedule: delay coefficients must be nonnegative");
}

PastCondition PastCondition::constant(Vec x0, double t_minus) {
    if (t_minus > 0.0) throw ValidationError("PastCondition: t_minus must be <= 0");
    PastCondition past;
    past.t_minus = t_minus;
    past.x0 = x0;
    past.x_past = [x0 = std::move(x0)](double) { return x0; };
    return past;
}

Path sample_past_noise(const DelaySchedule& sched, double t_minus, const WienerGrid& wiener,
                       Philox4x32& rng) {
    sched.validate();
    const int n = static_cast<int>(sched.k.size());
    if (wiener.channels != n)
        throw DimensionMismatch("sample_past_noise: wiener channels != noise dimension");
    const int i_start = wiener.index_of(t_minus);
    const int i_zero = wiener.index_of(0.0);
    const std::vector<double> taus = sched.taus();

    Path y;
    y.dim = n;
    const int steps = i_zero - i_start;
    y.times.resize(steps + 1);
    y.data.resize(static_cast<std::size_t>(steps + 1) * n);
    for (int i = 0; i <= steps; ++i) y.times[i] = t_minus + i * wiener.h;

    NoiseState state = stationary_noise_state(taus, t_minus, rng);
    std::copy(state.y.begin(), state.y.end(), y.state(0).begin());
    for (int i = 0; i < steps; ++i) {
        ou_step_shared_inplace(state.y, wiener.h, taus, wiener.increments(i_start + i));
        state.t += wiener.h;
        std::copy(state.y.begin(), state.y.end(), y.state(i + 1).begin());
    }
    return y;
}

Vec delayed_lookup(const Path& x_path, const PastCondition& past, double t,
                   std::span<const double> c, double eps) {
    const int m = x_path.dim;
    if (static_cast<int>(c.size()) != m)
        throw DimensionMismatch("delayed_lookup: delay coefficients != state dimension");
    Vec out(m);
    for (int i = 0; i < m; ++i) {
        const double s = t - c[i] * eps;
        if (s < past.t_minus - 1e-9)
            throw HistoryTooShort("delayed_lookup: t - delta_" + std::to_string(i) + " = " +
                                  std::to_string(s) + " precedes t_minus = " +
                                  std::to_string(past.t_minus));
        if (s < -1e-12) {
            out[i] = past.x_past(std::max(s, past.t_minus))[i];
        } else {
            out[i] = x_path.interpolate(std::max(s, 0.0), i);
        }
    }
    return out;
}

SddeResult integrate_sdde(const ModelSpec& model, const DelaySchedule& sched,
                          const PastCondition& past, const WienerGrid& wiener, double h) {
    sched.validate();
    if (static_cast<int>(sched.c.size()) != model.m)
        throw DimensionMismatch("integrate_sdde: delay coefficients != state dimension");
    if (static_cast<int>(sched.k.size()) != model.n)
        throw DimensionMismatch("integrate_sdde: noise coefficients != noise dimension");
    if (wiener.channels != model.n)
        throw DimensionMismatch("integrate_sdde: wiener channels != noise dimension");
    if (std::abs(wiener.h - h) > 1e-12 * std::max(1.0, h))
        throw BadGrid("integrate_sdde: h must equal the Wiener grid step");

    const double min_tau = sched.min_tau();
    if (h > min_tau / 10.0)
        throw StepTooLarge("integrate_sdde: h exceeds min(tau)/10 = " + std::to_string(min_tau / 10.0));
    double min_pos_delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sched.c.size(); ++i)
        if (sched.c[i] > 0.0) min_pos_delta = std::min(min_pos_delta, sched.delta(static_cast<int>(i)));
    if (std::isfinite(min_pos_delta) && h > min_pos_delta / 4.0)
        throw StepTooLarge("integrate_sdde: h exceeds min positive delta / 4");
    const double max_delta = sched.max_delta();
    if (max_delta > 0.0 && !(max_delta < std::abs(past.t_minus) / 2.0))
        throw HistoryTooShort("integrate_sdde: need max delta < |t_minus|/2, got max delta = " +
                              std::to_string(max_delta) + ", t_minus = " + std::to_string(past.t_minus));

    const int i_start = wiener.index_of(past.t_minus);
    const int i_zero = wiener.index_of(0.0);
    const int steps_fwd = wiener.steps - i_zero;
    if (steps_fwd < 0) throw BadGrid("integrate_sdde: Wiener grid ends before t = 0");
    const std::vector<double> taus = sched.taus();

    SddeResult result;
    Path& y = result.y;
    y.dim = model.n;
    const int y_steps = wiener.steps - i_start;
    y.times.resize(y_steps + 1);
    y.data.resize(static_cast<std::size_t>(y_steps + 1) * model.n);
    for (int i = 0; i <= y_steps; ++i) y.times[i] = past.t_minus + i * h;

    Path& x = result.x;
    x.dim = model.m;
    x.times.resize(steps_fwd + 1);
    x.data.resize(static_cast<std::size_t>(steps_fwd + 1) * model.m);
    for (int i = 0; i <= steps_fwd; ++i) x.times[i] = i * h;

    Philox4x32 init_rng = rng_stream(wiener.seed, StreamPurpose::stationary_init, 0);
    std::vector<double> cur_y = stationary_noise_state(taus, past.t_minus, init_rng).y;
    std::copy(cur_y.begin(), cur_y.end(), y.state(0).begin());

    if (static_cast<int>(past.x0.size()) != model.m)
        throw DimensionMismatch("integrate_sdde: past.x0 has wrong length");
    std::copy(past.x0.begin(), past.x0.end(), x.state(0).begin());

    Vec xt(past.x0);
    for (int i = i_start; i < wiener.steps; ++i) {
        if (i >= i_zero) {
            const int fi = i - i_zero;
            const double t = x.times[fi];
            const Vec xhat = delayed_lookup(x, past, t, sched.c, sched.eps);
            const Vec f = model.drift(xt);
            const Mat sig = model.sigma(xhat);
            auto next = x.state(fi + 1);
            for (int comp = 0; comp < model.m; ++comp) {
                double diffusion = 0.0;
                for (int j = 0; j < model.n; ++j) diffusion += sig(comp, j) * cur_y[j];
                next[comp] = xt[comp] + f[comp] * h + diffusion * h;
            }
            std::copy(next.begin(), next.end(), xt.begin());
        }
        ou_step_shared_inplace(cur_y, h, taus, wiener.increments(i));
        std::copy(cur_y.begin(), cur_y.end(), y.state(i - i_start + 1).begin());
    }
    return result;
}

}  // namespace sdde
