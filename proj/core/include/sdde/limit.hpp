#pragma once

#include <string>

#include "sdde/delay.hpp"
#include "sdde/model.hpp"
#include "sdde/path.hpp"

namespace sdde {

/// Which drift-correction coefficient multiplies sigma_pj d sigma_ij/dx_p:
///   exact        (1/2) e^{-c_p/k_j}     small-delay limit of the delayed system
///   taylor       (1/2) (1 + c_p/k_j)^-1 first-order-in-delay expansion of exact
///   stratonovich 1/2                    zero-delay special case
///   none         0                      plain Ito equation
enum class DriftKind { exact, taylor, stratonovich, none };

DriftKind drift_kind_from_string(const std::string& name);
std::string to_string(DriftKind kind);

double drift_coefficient(DriftKind kind, double c_p, double k_j);

/// S_i(x) = sum_{p,j} coeff(kind, c_p, k_j) sigma_pj(x) d sigma_ij(x)/d x_p.
/// Depends on (c, k, eps) only through the ratios c_p / k_j.
Vec noise_induced_drift(const ModelSpec& model, const Vec& x, const DelaySchedule& sched,
                        DriftKind kind);

/// Euler-Maruyama for dx = (f(x) + S(x)) dt + sigma(x) dW on [0, T]; the
/// Wiener grid must contain 0 as a node and supplies both step and horizon.
Path integrate_ito_sde(const ModelSpec& model, const DelaySchedule& sched, DriftKind kind,
                       const Vec& x0, const WienerGrid& wiener, double h);

/// Heun predictor-corrector for the Stratonovich equation
/// dx = f(x) dt + sigma(x) o dW (no explicit drift correction).
Path integrate_stratonovich_heun(const ModelSpec& model, const Vec& x0, const WienerGrid& wiener,
                                 double h);

}  // namespace sdde
