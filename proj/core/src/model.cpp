#include "sdde/model.hpp"

#include <cmath>
#include <utility>

namespace sdde {

namespace {

void check_state(const ModelSpec& model, const Vec& x, const char* where) {
    if (static_cast<int>(x.size()) != model.m)
        throw DimensionMismatch(std::string(where) + ": state has length " +
                                std::to_string(x.size()) + ", model expects m = " +
                                std::to_string(model.m));
}

}  // namespace

ModelSpec linear1d(double a, double b, double c) {
    ModelSpec model;
    model.m = 1;
    model.n = 1;
    model.name = "linear1d";
    model.bounded = false;
    model.drift = [a](const Vec& x) { return Vec{a * x[0]}; };
    model.sigma = [b, c](const Vec& x) { return Mat(1, 1, {b * x[0] + c}); };
    model.sigma_jac = [b](const Vec&) { return Tensor3(1, 1, 1, b); };
    return model;
}

ModelSpec additive(Mat sigma_const) {
    ModelSpec model;
    model.m = sigma_const.rows;
    model.n = sigma_const.cols;
    model.name = "additive";
    model.bounded = true;
    const int m = model.m;
    model.drift = [m](const Vec&) { return Vec(m, 0.0); };
    model.sigma = [s = std::move(sigma_const)](const Vec&) { return s; };
    model.sigma_jac = [m, n = model.n](const Vec&) { return Tensor3(m, n, m, 0.0); };
    return model;
}

ModelSpec bounded2d(const Mat& A, const Mat& B) {
    if (A.rows != 2 || A.cols != 2 || B.rows != 2 || B.cols != 2)
        throw DimensionMismatch("bounded2d: A and B must be 2x2");
    ModelSpec model;
    model.m = 2;
    model.n = 2;
    model.name = "bounded2d";
    model.bounded = true;
    model.drift = [](const Vec& x) { return Vec{-std::tanh(x[0]), -std::tanh(x[1])}; };
    model.sigma = [A, B](const Vec& x) {
        Mat s(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) s(i, j) = A(i, j) + B(i, j) * std::tanh(x[j]);
        return s;
    };
    // sigma_ij depends on x through x_j only: d sigma_ij / d x_p = B_ij sech^2(x_j) for p = j.
    model.sigma_jac = [B](const Vec& x) {
        Tensor3 jac(2, 2, 2, 0.0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const double ch = std::cosh(x[j]);
                jac(i, j, j) = B(i, j) / (ch * ch);
            }
        return jac;
    };
    return model;
}

Vec eval_drift(const ModelSpec& model, const Vec& x) {
    check_state(model, x, "eval_drift");
    Vec f = model.drift(x);
    if (static_cast<int>(f.size()) != model.m)
        throw DimensionMismatch("eval_drift: drift returned wrong length");
    return f;
}

Mat eval_sigma(const ModelSpec& model, const Vec& x) {
    check_state(model, x, "eval_sigma");
    Mat s = model.sigma(x);
    if (s.rows != model.m || s.cols != model.n)
        throw DimensionMismatch("eval_sigma: sigma returned wrong shape");
    return s;
}

Tensor3 eval_sigma_jacobian(const ModelSpec& model, const Vec& x) {
    check_state(model, x, "eval_sigma_jacobian");
    Tensor3 jac = model.sigma_jac(x);
    if (jac.d0 != model.m || jac.d1 != model.n || jac.d2 != model.m)
        throw DimensionMismatch("eval_sigma_jacobian: jacobian has wrong shape");
    return jac;
}

Tensor3 finite_difference_sigma_jacobian(const ModelSpec& model, const Vec& x, double step) {
    check_state(model, x, "finite_difference_sigma_jacobian");
    Tensor3 jac(model.m, model.n, model.m, 0.0);
    for (int p = 0; p < model.m; ++p) {
        Vec xp = x, xm = x;
        xp[p] += step;
        xm[p] -= step;
        const Mat sp = model.sigma(xp);
        const Mat sm = model.sigma(xm);
        for (int i = 0; i < model.m; ++i)
            for (int j = 0; j < model.n; ++j)
                jac(i, j, p) = (sp(i, j) - sm(i, j)) / (2.0 * step);
    }
    return jac;
}

}  // namespace sdde
