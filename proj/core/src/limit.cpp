#include "sdde/limit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sdde/errors.hpp"

namespace sdde {

DriftKind drift_kind_from_string(const std::string& name) {
    if (name == "exact") return DriftKind::exact;
    if (name == "taylor") return DriftKind::taylor;
    if (name == "stratonovich") return DriftKind::stratonovich;
    if (name == "none") return DriftKind::none;
    throw ValidationError("unknown drift kind '" + name + "'");
}

std::string to_string(DriftKind kind) {
    switch (kind) {
        case DriftKind::exact: return "exact";
        case DriftKind::taylor: return "taylor";
        case DriftKind::stratonovich: return "stratonovich";
        case DriftKind::none: return "none";
    }
    return "?";
}

double drift_coefficient(DriftKind kind, double c_p, double k_j) {
    if (!(k_j > 0.0)) throw std::invalid_argument("drift_coefficient: k_j must be positive");
    if (c_p < 0.0) throw std::invalid_argument("drift_coefficient: c_p must be nonnegative");
    switch (kind) {
        case DriftKind::exact: return 0.5 * std::exp(-c_p / k_j);
        case DriftKind::taylor: return 0.5 / (1.0 + c_p / k_j);
        case DriftKind::stratonovich: return 0.5;
        case DriftKind::none: return 0.0;
    }
    return 0.0;
}

namespace {

void check_dims(const ModelSpec& model, const DelaySchedule& sched, const char* where) {
    if (static_cast<int>(sched.c.size()) != model.m)
        throw DimensionMismatch(std::string(where) + ": delay coefficients != state dimension");
    if (static_cast<int>(sched.k.size()) != model.n)
        throw DimensionMismatch(std::string(where) + ": noise coefficients != noise dimension");
}

Mat coefficient_table(const DelaySchedule& sched, DriftKind kind, int m, int n) {
    Mat coeff(m, n);
    for (int p = 0; p < m; ++p)
        for (int j = 0; j < n; ++j) coeff(p, j) = drift_coefficient(kind, sched.c[p], sched.k[j]);
    return coeff;
}

Vec drift_correction(const ModelSpec& model, const Vec& x, const Mat& coeff) {
    const Mat sig = model.sigma(x);
    const Tensor3 jac = model.sigma_jac(x);
    Vec s(model.m, 0.0);
    for (int i = 0; i < model.m; ++i) {
        double acc = 0.0;
        for (int p = 0; p < model.m; ++p)
            for (int j = 0; j < model.n; ++j) acc += coeff(p, j) * sig(p, j) * jac(i, j, p);
        s[i] = acc;
    }
    return s;
}

}  // namespace

Vec noise_induced_drift(const ModelSpec& model, const Vec& x, const DelaySchedule& sched,
                        DriftKind kind) {
    check_dims(model, sched, "noise_induced_drift");
    if (static_cast<int>(x.size()) != model.m)
        throw DimensionMismatch("noise_induced_drift: state has wrong length");
    return drift_correction(model, x, coefficient_table(sched, kind, model.m, model.n));
}

Path integrate_ito_sde(const ModelSpec& model, const DelaySchedule& sched, DriftKind kind,
                       const Vec& x0, const WienerGrid& wiener, double h) {
    sched.validate();
    check_dims(model, sched, "integrate_ito_sde");
    if (static_cast<int>(x0.size()) != model.m)
        throw DimensionMismatch("integrate_ito_sde: x0 has wrong length");
    if (wiener.channels != model.n)
        throw DimensionMismatch("integrate_ito_sde: wiener channels != noise dimension");
    if (std::abs(wiener.h - h) > 1e-12 * std::max(1.0, h))
        throw BadGrid("integrate_ito_sde: h must equal the Wiener grid step");

    const int i_zero = wiener.index_of(0.0);
    const int steps = wiener.steps - i_zero;
    const Mat coeff = coefficient_table(sched, kind, model.m, model.n);

    Path x;
    x.dim = model.m;
    x.times.resize(steps + 1);
    x.data.resize(static_cast<std::size_t>(steps + 1) * model.m);
    for (int i = 0; i <= steps; ++i) x.times[i] = i * h;
    std::copy(x0.begin(), x0.end(), x.state(0).begin());

    Vec xt(x0);
    for (int fi = 0; fi < steps; ++fi) {
        const Vec f = model.drift(xt);
        const Vec s = drift_correction(model, xt, coeff);
        const Mat sig = model.sigma(xt);
        const auto dW = wiener.increments(i_zero + fi);
        auto next = x.state(fi + 1);
        for (int comp = 0; comp < model.m; ++comp) {
            double diffusion = 0.0;
            for (int j = 0; j < model.n; ++j) diffusion += sig(comp, j) * dW[j];
            next[comp] = xt[comp] + (f[comp] + s[comp]) * h + diffusion;
        }
        std::copy(next.begin(), next.end(), xt.begin());
    }
    return x;
}

Path integrate_stratonovich_heun(const ModelSpec& model, const Vec& x0, const WienerGrid& wiener,
                                 double h) {
    if (static_cast<int>(x0.size()) != model.m)
        throw DimensionMismatch("integrate_stratonovich_heun: x0 has wrong length");
    if (wiener.channels != model.n)
        throw DimensionMismatch("integrate_stratonovich_heun: wiener channels != noise dimension");
    if (std::abs(wiener.h - h) > 1e-12 * std::max(1.0, h))
        throw BadGrid("integrate_stratonovich_heun: h must equal the Wiener grid step");

    const int i_zero = wiener.index_of(0.0);
    const int steps = wiener.steps - i_zero;

    Path x;
    x.dim = model.m;
    x.times.resize(steps + 1);
    x.data.resize(static_cast<std::size_t>(steps + 1) * model.m);
    for (int i = 0; i <= steps; ++i) x.times[i] = i * h;
    std::copy(x0.begin(), x0.end(), x.state(0).begin());

    Vec xt(x0);
    Vec pred(model.m);
    for (int fi = 0; fi < steps; ++fi) {
        const auto dW = wiener.increments(i_zero + fi);
        const Vec f0 = model.drift(xt);
        const Mat s0 = model.sigma(xt);
        for (int comp = 0; comp < model.m; ++comp) {
            double diffusion = 0.0;
            for (int j = 0; j < model.n; ++j) diffusion += s0(comp, j) * dW[j];
            pred[comp] = xt[comp] + f0[comp] * h + diffusion;
        }
        const Vec f1 = model.drift(pred);
        const Mat s1 = model.sigma(pred);
        auto next = x.state(fi + 1);
        for (int comp = 0; comp < model.m; ++comp) {
            double diffusion = 0.0;
            for (int j = 0; j < model.n; ++j)
                diffusion += 0.5 * (s0(comp, j) + s1(comp, j)) * dW[j];
            next[comp] = xt[comp] + 0.5 * (f0[comp] + f1[comp]) * h + diffusion;
        }
        std::copy(next.begin(), next.end(), xt.begin());
    }
    return x;
}

}  // namespace sdde
