#include "sdde/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "sdde/errors.hpp"
#include "sdde/stats.hpp"

namespace sdde {

namespace {

// Past window long enough for the delayed lookups, as an exact multiple
// of h and strictly longer than 2 max(delta).
double past_window_start(const DelaySchedule& sched, double h) {
    const double max_delta = sched.max_delta();
    if (max_delta == 0.0) return 0.0;
    const int steps = static_cast<int>(std::ceil(2.0 * max_delta / h - 1e-9)) + 1;
    return -steps * h;
}

double grid_end(double T, double h) {
    const int steps = static_cast<int>(std::ceil(T / h - 1e-9));
    return steps * h;
}

double sup_distance(const Path& a, const Path& b) {
    const int n = std::min(a.size(), b.size());
    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
        double d2 = 0.0;
        for (int comp = 0; comp < a.dim; ++comp) {
            const double d = a.value(i, comp) - b.value(i, comp);
            d2 += d * d;
        }
        sup = std::max(sup, std::sqrt(d2));
    }
    return sup;
}

Vec default_x0(const ModelSpec& model, const Vec& x0) {
    if (x0.empty()) return Vec(model.m, 0.0);
    if (static_cast<int>(x0.size()) != model.m)
        throw DimensionMismatch("x0 has wrong length for model");
    return x0;
}

void warn_if_unbounded(const ModelSpec& model) {
    if (!model.bounded)
        std::cerr << "warning: model '" << model.name
                  << "' violates the boundedness hypotheses; convergence is not guaranteed\n";
}

}  // namespace

double coupled_sup_error(const ModelSpec& model, const DelaySchedule& sched, std::uint64_t seed,
                         double h, double T, const Vec& x0) {
    sched.validate();
    if (!(T > 0.0)) throw std::invalid_argument("coupled_sup_error: T must be positive");
    const Vec start = default_x0(model, x0);
    const double t_minus = past_window_start(sched, h);
    const double t_end = grid_end(T, h);
    const WienerGrid wiener = build_wiener(seed, t_minus, t_end, h, model.n);
    const PastCondition past = PastCondition::constant(start, t_minus);
    const SddeResult delayed = integrate_sdde(model, sched, past, wiener, h);
    const Path limit = integrate_ito_sde(model, sched, DriftKind::exact, start, wiener, h);
    return sup_distance(delayed.x, limit);
}

ConvergenceReport convergence_experiment(const ModelSpec& model, const DelaySchedule& sched_template,
                                         std::span<const double> eps_list, int trials, double a,
                                         double T, std::uint64_t base_seed, double h_ratio,
                                         const Vec& x0) {
    if (eps_list.empty()) throw ValidationError("convergence_experiment: empty eps schedule");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw ValidationError("convergence_experiment: eps_list must be strictly decreasing");
    if (trials < 1) throw ValidationError("convergence_experiment: trials must be >= 1");
    if (!(a > 0.0)) throw ValidationError("convergence_experiment: threshold a must be positive");
    if (!(h_ratio >= 10.0)) throw ValidationError("convergence_experiment: h_ratio must be >= 10");
    warn_if_unbounded(model);

    ConvergenceReport report;
    report.a = a;
    report.trials = trials;
    std::vector<double> errors(trials);
    for (double eps : eps_list) {
        const DelaySchedule sched = sched_template.with_eps(eps);
        const double h = eps / h_ratio;
        int exceed = 0;
        for (int t = 0; t < trials; ++t) {
            errors[t] = coupled_sup_error(model, sched, base_seed + t, h, T, x0);
            if (errors[t] > a) ++exceed;
        }
        const MeanSE stats = mean_se(errors);
        const WilsonInterval ci = wilson95(exceed, trials);
        report.rows.push_back({eps, static_cast<double>(exceed) / trials, ci.lo, ci.hi, stats.mean,
                               stats.se});
    }
    return report;
}

FalsificationResult drift_falsification(const ModelSpec& model, const DelaySchedule& sched,
                                        int trials, double T, std::uint64_t base_seed,
                                        double h_ratio, const Vec& x0) {
    sched.validate();
    if (trials < 2) throw ValidationError("drift_falsification: trials must be >= 2");
    warn_if_unbounded(model);

    const Vec start = default_x0(model, x0);
    const double h = sched.eps / h_ratio;
    const double t_minus = past_window_start(sched, h);
    const double t_end = grid_end(T, h);

    std::vector<double> err_exact(trials), err_taylor(trials);
    for (int t = 0; t < trials; ++t) {
        const WienerGrid wiener = build_wiener(base_seed + t, t_minus, t_end, h, model.n);
        const PastCondition past = PastCondition::constant(start, t_minus);
        const SddeResult delayed = integrate_sdde(model, sched, past, wiener, h);
        const Path lim_exact = integrate_ito_sde(model, sched, DriftKind::exact, start, wiener, h);
        const Path lim_taylor = integrate_ito_sde(model, sched, DriftKind::taylor, start, wiener, h);
        err_exact[t] = sup_distance(delayed.x, lim_exact);
        err_taylor[t] = sup_distance(delayed.x, lim_taylor);
    }

    const MeanSE me = mean_se(err_exact);
    const MeanSE mt = mean_se(err_taylor);
    const PairedTResult tt = paired_t_less(err_exact, err_taylor);
    return {sched.eps, me.mean, me.se, mt.mean, mt.se, tt.t, tt.p_one_sided, trials};
}

namespace {

struct GRunResult {
    double sup_abs_g = 0.0;
    double time_average = 0.0;
};

// Streams the stationary noise pair over [t_minus, T] with a ring buffer
// for the lagged channel; no path is materialized.
GRunResult g_process_run(const DelaySchedule& sched, int j, int l, int p, double T, double h,
                         std::uint64_t seed) {
    sched.validate();
    const int n = static_cast<int>(sched.k.size());
    if (j < 0 || j >= n || l < 0 || l >= n)
        throw DimensionMismatch("g_process: noise index out of range");
    if (p < 0 || p >= static_cast<int>(sched.c.size()))
        throw DimensionMismatch("g_process: state index out of range");
    if (T < 0.0) throw std::invalid_argument("g_process: T must be nonnegative");
    if (T == 0.0) return {};

    const double lag = sched.delta(p);
    const double psi_value = psi(j, l, p, sched.k, sched.c);
    const int lag_steps = static_cast<int>(std::ceil(lag / h - 1e-9));
    const int past_steps = lag_steps + 1;
    const double t_minus = -past_steps * h;
    const double t_end = grid_end(T, h);
    const WienerGrid wiener = build_wiener(seed, t_minus, t_end, h, n);
    const std::vector<double> taus = sched.taus();

    Philox4x32 init_rng = rng_stream(seed, StreamPurpose::stationary_init, 0);
    std::vector<double> y = stationary_noise_state(taus, t_minus, init_rng).y;

    // Ring buffer of y_l values at the last `cap` nodes.
    const int cap = past_steps + 2;
    std::vector<double> hist(cap, 0.0);
    hist[0] = y[l];

    const double q = lag / h;  // lag in grid units
    const int i_zero = past_steps;
    const int total_steps = wiener.steps;
    double g = 0.0;
    double sup_abs = 0.0;
    double integral_raw = 0.0;

    for (int i = 0; i < total_steps; ++i) {
        if (i >= i_zero) {
            const double pos = i - q;
            double y_lagged;
            const double rounded = std::round(pos);
            if (std::abs(pos - rounded) < 1e-9) {
                y_lagged = hist[static_cast<int>(rounded) % cap];
            } else {
                const int lo = static_cast<int>(std::floor(pos));
                const double w = pos - lo;
                y_lagged = (1.0 - w) * hist[lo % cap] + w * hist[(lo + 1) % cap];
            }
            const double product = sched.k[j] * sched.eps * y[j] * y_lagged;
            integral_raw += product * h;
            g += (product - psi_value) * h;
            sup_abs = std::max(sup_abs, std::abs(g));
        }
        ou_step_shared_inplace(y, h, taus, wiener.increments(i));
        hist[(i + 1) % cap] = y[l];
    }
    return {sup_abs, integral_raw / (total_steps - i_zero) / h};
}

}  // namespace

double g_process_sup(const DelaySchedule& sched, int j, int l, int p, double T, double h,
                     std::uint64_t seed) {
    return g_process_run(sched, j, l, p, T, h, seed).sup_abs_g;
}

double psi_time_average(const DelaySchedule& sched, int j, int l, int p, double T, double h,
                        std::uint64_t seed) {
    return g_process_run(sched, j, l, p, T, h, seed).time_average;
}

MomentEstimate eps_y_sup_moment(const DelaySchedule& sched, double T, int trials,
                                std::uint64_t base_seed, double h_ratio) {
    sched.validate();
    if (trials < 1) throw ValidationError("eps_y_sup_moment: trials must be >= 1");
    if (T < 0.0) throw std::invalid_argument("eps_y_sup_moment: T must be nonnegative");
    const int n = static_cast<int>(sched.k.size());
    const double h = sched.eps / h_ratio;
    const std::vector<double> taus = sched.taus();
    const double eps2 = sched.eps * sched.eps;

    std::vector<double> sups(trials);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t seed = base_seed + t;
        Philox4x32 init_rng = rng_stream(seed, StreamPurpose::stationary_init, 0);
        std::vector<double> y = stationary_noise_state(taus, 0.0, init_rng).y;
        auto norm2 = [&]() {
            double s = 0.0;
            for (double v : y) s += v * v;
            return eps2 * s;
        };
        double sup = norm2();
        if (T > 0.0) {
            const WienerGrid wiener = build_wiener(seed, 0.0, grid_end(T, h), h, n);
            for (int i = 0; i < wiener.steps; ++i) {
                ou_step_shared_inplace(y, h, taus, wiener.increments(i));
                sup = std::max(sup, norm2());
            }
        }
        sups[t] = sup;
    }
    const MeanSE stats = mean_se(sups);
    return {stats.mean, stats.se, trials};
}

GStatReport g_stat_experiment(const DelaySchedule& sched_template, int j, int l, int p,
                              std::span<const double> eps_list, int trials, double T,
                              std::uint64_t base_seed, double h_ratio) {
    if (eps_list.empty()) throw ValidationError("g_stat_experiment: empty eps schedule");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw ValidationError("g_stat_experiment: eps_list must be strictly decreasing");
    if (trials < 1) throw ValidationError("g_stat_experiment: trials must be >= 1");

    GStatReport report;
    report.j = j;
    report.l = l;
    report.p = p;
    std::vector<double> sq(trials);
    for (double eps : eps_list) {
        const DelaySchedule sched = sched_template.with_eps(eps);
        const double h = eps / h_ratio;
        for (int t = 0; t < trials; ++t) {
            const double sup = g_process_sup(sched, j, l, p, T, h, base_seed + t);
            sq[t] = sup * sup;
        }
        const MeanSE stats = mean_se(sq);
        report.rows.push_back({eps, stats.mean, stats.se});
    }
    return report;
}

Path ou_exact_chain(const OUParams& params, double h, int n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("ou_exact_chain: need at least one sample");
    Philox4x32 rng = rng_stream(seed, StreamPurpose::generic, 0);
    Path path;
    path.dim = 1;
    path.times.resize(n_samples);
    path.data.resize(n_samples);
    double y = ou_stationary_sample(params, rng);
    path.times[0] = 0.0;
    path.data[0] = y;
    for (int i = 1; i < n_samples; ++i) {
        y = ou_step_exact(y, h, params.tau, rng.next_gaussian());
        path.times[i] = i * h;
        path.data[i] = y;
    }
    return path;
}

Path white_noise_chain(double h, int n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("white_noise_chain: need at least one sample");
    Philox4x32 rng = rng_stream(seed, StreamPurpose::generic, 0);
    Path path;
    path.dim = 1;
    path.times.resize(n_samples);
    path.data.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        path.times[i] = i * h;
        path.data[i] = rng.next_gaussian();
    }
    return path;
}

Fig1Result fig1_realizations(double a, double b, double c, double tau, double T, double h,
                             std::uint64_t seed) {
    if (!(tau > 0.0)) throw std::invalid_argument("fig1_realizations: tau must be positive");
    const ModelSpec model = linear1d(a, b, c);
    const DelaySchedule sched{{0.0}, {1.0}, tau};
    const WienerGrid wiener = build_wiener(seed, 0.0, grid_end(T, h), h, 1);
    const PastCondition past = PastCondition::constant({0.0}, 0.0);
    Fig1Result result;
    result.ou_driven = integrate_sdde(model, sched, past, wiener, h).x;
    result.white_driven = integrate_ito_sde(model, sched, DriftKind::none, {0.0}, wiener, h);
    return result;
}

}  // namespace sdde
