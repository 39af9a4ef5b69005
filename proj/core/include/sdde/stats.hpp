#pragma once

#include <span>
#include <vector>

namespace sdde {

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean
    int n = 0;
};

MeanSE mean_se(std::span<const double> xs);

/// Unbiased sample variance.
double sample_variance(std::span<const double> xs);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// 95% Wilson score interval for a binomial proportion.
WilsonInterval wilson95(int successes, int n);

struct KSResult {
    double d = 0.0;  // sup distance between empirical CDFs
    double p = 1.0;  // asymptotic p-value (Kolmogorov distribution)
};

/// Two-sample Kolmogorov-Smirnov test; samples must be independent.
KSResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct PairedTResult {
    double t = 0.0;
    double p_one_sided = 1.0;  // P[T >= t] under H0: mean(a - b) = 0
    int n = 0;
};

/// One-sided paired t-test of H1: mean(a) < mean(b).
PairedTResult paired_t_less(std::span<const double> a, std::span<const double> b);

/// Least-squares slope of log(y) against log(x); all entries must be > 0.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace sdde
