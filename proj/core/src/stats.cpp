#include "sdde/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace sdde {

MeanSE mean_se(std::span<const double> xs) {
    MeanSE out;
    out.n = static_cast<int>(xs.size());
    if (out.n == 0) return out;
    double sum = 0.0;
    for (double x : xs) sum += x;
    out.mean = sum / out.n;
    if (out.n > 1) out.se = std::sqrt(sample_variance(xs) / out.n);
    return out;
}

double sample_variance(std::span<const double> xs) {
    const int n = static_cast<int>(xs.size());
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return ss / (n - 1);
}

WilsonInterval wilson95(int successes, int n) {
    if (n <= 0) throw std::invalid_argument("wilson95: n must be positive");
    const double z = 1.959963984540054;  // Phi^-1(0.975)
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// Kolmogorov survival function Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda) {
    if (lambda < 1e-8) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

KSResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::size_t na = a.size(), nb = b.size();
    std::size_t ia = 0, ib = 0;
    double d = 0.0;
    while (ia < na && ib < nb) {
        const double x = std::min(a[ia], b[ib]);
        while (ia < na && a[ia] <= x) ++ia;
        while (ib < nb && b[ib] <= x) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
    }
    const double ne = static_cast<double>(na) * nb / (na + nb);
    const double sqrt_ne = std::sqrt(ne);
    // Stephens' small-sample correction to the asymptotic distribution.
    const double lambda = (sqrt_ne + 0.12 + 0.11 / sqrt_ne) * d;
    return {d, kolmogorov_q(lambda)};
}

PairedTResult paired_t_less(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("paired_t_less: length mismatch");
    const int n = static_cast<int>(a.size());
    if (n < 2) throw std::invalid_argument("paired_t_less: need at least 2 pairs");
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = b[i] - a[i];
    const MeanSE d = mean_se(diff);
    PairedTResult out;
    out.n = n;
    if (d.se == 0.0) {
        out.t = d.mean > 0 ? std::numeric_limits<double>::infinity()
                           : (d.mean < 0 ? -std::numeric_limits<double>::infinity() : 0.0);
        out.p_one_sided = d.mean > 0 ? 0.0 : 1.0;
        return out;
    }
    out.t = d.mean / d.se;
    boost::math::students_t dist(n - 1);
    out.p_one_sided = boost::math::cdf(boost::math::complement(dist, out.t));
    return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("loglog_slope: need matched samples, length >= 2");
    const int n = static_cast<int>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0) throw std::invalid_argument("loglog_slope: nonpositive value");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace sdde
