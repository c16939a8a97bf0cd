#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ssrelay/errors.hpp"
#include "ssrelay/specfun.hpp"

namespace ssrelay::specfun {

// Fixed-Talbot contour (Abate & Valko): s(theta) = r theta (cot theta + i),
// r = 2M / (5t), trapezoidal rule on theta_k = k pi / M.
double laplace_invert(const ComplexTransform& transform, double t, TalbotOptions options) {
    if (!(t > 0.0)) {
        throw DomainError("laplace_invert: t must be > 0, got " + std::to_string(t));
    }
    if (options.nodes < 2) throw DomainError("laplace_invert: need at least 2 nodes");

    const int m = options.nodes;
    const double r = 2.0 * m / (5.0 * t);

    const std::complex<double> f0 = transform({r, 0.0});
    double sum = 0.5 * f0.real() * std::exp(r * t);
    if (!std::isfinite(sum)) {
        throw NumericalFailure("laplace_invert: non-finite transform value at s = r");
    }
    for (int k = 1; k < m; ++k) {
        const double theta = k * std::numbers::pi / m;
        const double cot = 1.0 / std::tan(theta);
        const std::complex<double> s{r * theta * cot, r * theta};
        const double sigma = theta + (theta * cot - 1.0) * cot;
        const std::complex<double> value = std::exp(t * s) * transform(s) *
                                           std::complex<double>{1.0, sigma};
        if (!std::isfinite(value.real())) {
            throw NumericalFailure("laplace_invert: non-finite contour term at node " +
                                   std::to_string(k));
        }
        sum += value.real();
    }
    return r / m * sum;
}

double laplace_invert_cdf(const ComplexTransform& mgf, double t, TalbotOptions options) {
    constexpr double kSlack = 1e-7;
    const double value = laplace_invert(
        [&mgf](std::complex<double> s) { return mgf(s) / s; }, t, options);
    if (value < -kSlack || value > 1.0 + kSlack) {
        throw NumericalFailure("laplace_invert_cdf: inverted CDF " + std::to_string(value) +
                               " outside [0, 1] at t = " + std::to_string(t));
    }
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace ssrelay::specfun
