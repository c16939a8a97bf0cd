#pragma once

#include <complex>
#include <functional>

namespace ssrelay::specfun {

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// Exponential integral E1(x) = int_x^inf e^-t / t dt, x > 0.
///
/// Power series below x = 1, continued fraction above. Throws DomainError for
/// x <= 0 (including NaN).
double exp_integral_e1(double x);

/// e^x E1(x) for x > 0, computed without forming e^x or E1 separately, so it
/// stays finite for large x.
double exp_scaled_e1(double x);

/// Principal-branch e^z E1(z) on the plane cut along (-inf, 0].
std::complex<double> exp_scaled_e1(std::complex<double> z);

/// Tricomi confluent hypergeometric Psi(1, 0; z) = 1 - z e^z E1(z), z > 0.
/// Result lies in (0, 1) and decreases in z.
double tricomi_psi_1_0(double z);

/// Analytic continuation of Psi(1, 0; z) off the positive axis; needed when
/// the Laplace inversion contour leaves the real line.
std::complex<double> tricomi_psi_1_0(std::complex<double> z);

/// Gauss hypergeometric 2F1(1, 1; 3; x) on [0, 1).
///
/// Uses the power series below `kHyp2f1SeriesThreshold` and the elementary
/// closed form 2 (x + (1 - x) ln(1 - x)) / x^2 above it.
double hyp2f1_113(double x);
inline constexpr double kHyp2f1SeriesThreshold = 0.05;

/// Bessel function of the first kind, order one, for x >= 0.
double bessel_j1(double x);

/// n-th positive zero of J1 (n >= 1), j_{1,1} = 3.8317...
double bessel_j1_zero(int n);

/// Laplace-domain function evaluated on a complex contour.
using ComplexTransform = std::function<std::complex<double>(std::complex<double>)>;

struct TalbotOptions {
    /// Number of contour nodes. Round-off grows like exp(0.4 * nodes) in
    /// double precision, so values much above 40 lose accuracy.
    int nodes = 32;
};

/// Fixed-Talbot inversion of F(s) at t > 0 (no clamping).
double laplace_invert(const ComplexTransform& transform, double t,
                      TalbotOptions options = {});

/// CDF of a nonnegative random variable X from its transform
/// M(s) = E[exp(-s X)], i.e. the inverse Laplace transform of M(s)/s at t.
///
/// `mgf` must accept complex s (the analytic continuation of M). Targets with
/// atoms are out of contract; the inverted CDF has to be smooth on (0, inf).
/// Results within 1e-7 of [0, 1] are clamped; anything further out, or any
/// non-finite intermediate, raises NumericalFailure.
double laplace_invert_cdf(const ComplexTransform& mgf, double t,
                          TalbotOptions options = {});

}  // namespace ssrelay::specfun
