#pragma once

#include <functional>
#include <string>

#include "sdde/linalg.hpp"

namespace sdde {

/// A dynamical system dx = f(x) dt + sigma(x_{t-delta}) xi_t dt with state
/// dimension m and noise dimension n. sigma_jac supplies the analytic
/// derivative d sigma_ij / d x_p needed by the noise-induced drift; it is
/// validated against finite differences in the test suite.
struct ModelSpec {
    int m = 0;
    int n = 0;
    std::function<Vec(const Vec&)> drift;
    std::function<Mat(const Vec&)> sigma;
    std::function<Tensor3(const Vec&)> sigma_jac;
    /// Whether f is bounded and sigma is bounded with bounded, Lipschitz
    /// first derivatives (the regime in which the small-scale limit is
    /// guaranteed to hold).
    bool bounded = false;
    std::string name;
};

/// Scalar system f(x) = a x, sigma(x) = b x + c. Unbounded coefficients,
/// so bounded = false; used for demonstration runs, not convergence tests.
ModelSpec linear1d(double a, double b, double c);

/// Constant diffusion (any m, n) with zero drift.
ModelSpec additive(Mat sigma_const);

/// Two-dimensional system with f_i(x) = -tanh(x_i) and
/// sigma_ij(x) = A_ij + B_ij tanh(x_j); everything bounded and Lipschitz.
ModelSpec bounded2d(const Mat& A, const Mat& B);

Vec eval_drift(const ModelSpec& model, const Vec& x);
Mat eval_sigma(const ModelSpec& model, const Vec& x);
Tensor3 eval_sigma_jacobian(const ModelSpec& model, const Vec& x);

/// Centered finite difference of sigma, independent of sigma_jac.
Tensor3 finite_difference_sigma_jacobian(const ModelSpec& model, const Vec& x, double step);

}  // namespace sdde
