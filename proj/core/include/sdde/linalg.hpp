#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sdde/errors.hpp"

namespace sdde {

using Vec = std::vector<double>;

/// Dense row-major matrix. Dimensions here are tiny (state and noise
/// dimensions of the models), so no BLAS backing is warranted.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}
    Mat(int r, int c, std::initializer_list<double> values) : rows(r), cols(c), a(values) {
        if (static_cast<int>(a.size()) != r * c)
            throw DimensionMismatch("Mat: initializer length does not match rows*cols");
    }

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// Rank-3 tensor indexed (i, j, p); stores the diffusion Jacobian
/// d sigma_ij / d x_p with shape m x n x m.
struct Tensor3 {
    int d0 = 0, d1 = 0, d2 = 0;
    std::vector<double> a;

    Tensor3() = default;
    Tensor3(int n0, int n1, int n2, double fill = 0.0)
        : d0(n0), d1(n1), d2(n2), a(static_cast<std::size_t>(n0) * n1 * n2, fill) {}

    double& operator()(int i, int j, int p) {
        return a[(static_cast<std::size_t>(i) * d1 + j) * d2 + p];
    }
    double operator()(int i, int j, int p) const {
        return a[(static_cast<std::size_t>(i) * d1 + j) * d2 + p];
    }
};

}  // namespace sdde
