#pragma once

#include <span>

#include "ssrelay/specfun.hpp"

namespace ssrelay::analysis {

// All distributions below are of per-hop SNRs conditioned on transmission,
// hop k having CDF 1 - a_k / (gamma + a_k) with a_k > 1.

/// 1 - a / (gamma + a).
double hop_cdf(double gamma, double a);

/// a / (gamma + a)^2.
double hop_pdf(double gamma, double a);

/// E[exp(-s / gamma_k)] = Psi(1, 0; s / a), the transform of 1 / gamma_k.
double mgf_inv_hop(double s, double a);

/// CDF of the end-to-end SNR (sum_k 1/gamma_k)^-1 by numerical Laplace
/// inversion of prod_k Psi(1, 0; s / a_k). gamma > 0, any K >= 1.
double e2e_cdf(double gamma, std::span<const double> shapes,
               specfun::TalbotOptions options = {});

/// Closed-form two-hop CDF
///   1 - (1/2) (1 + g/a1)^-1 (1 + g/a2)^-1 2F1(1, 1; 3; x),
///   x = (1 + (1/a1 + 1/a2) g) / ((1 + g/a1)(1 + g/a2)).
double e2e_cdf_k2(double gamma, double a1, double a2);

/// The hypergeometric argument x(gamma) used by e2e_cdf_k2 and rate_k2.
double k2_argument(double gamma, double a1, double a2);

/// MGF E[exp(-s gamma_e2e)] from the Hankel-transform integral
///   1 - 2 sqrt(s) int_0^inf J1(2 x sqrt(s)) prod_k Psi(1, 0; x^2 / a_k) dx.
///
/// Integrated lobe by lobe between zeros of J1, with Wynn epsilon
/// acceleration of the partial sums; at most 200 lobes. Throws
/// NumericalFailure if the tail does not settle.
double e2e_mgf(double s, std::span<const double> shapes);

/// Which min-based bound on the end-to-end SNR.
enum class BoundSide {
    upper,  ///< min_k gamma_k
    lower,  ///< min_k gamma_k / K
};

/// CDF of the bound: upper gives 1 - prod a_k / (gamma + a_k), lower gives
/// 1 - prod a_k / (K gamma + a_k). Note the lower SNR bound has the larger
/// CDF.
double bound_cdf(double gamma, std::span<const double> shapes, BoundSide side);

/// Outage probability sandwich at threshold gamma_th.
struct OutageBounds {
    double lower;  ///< CDF of the upper SNR bound
    double upper;  ///< CDF of the lower SNR bound
};

OutageBounds outage_bounds(double gamma_th, std::span<const double> shapes);

/// Whether a limiting / gain / rate formula uses a = gamma-bar lambda eta /
/// sigma^2 + 1 (exact) or drops the +1 as the closed forms usually print it.
enum class ShapeVariant { exact, printed };

double shape_param(double lambda, double eta, double noise_variance, double snr_scale,
                   ShapeVariant variant = ShapeVariant::exact);

/// Location and scale of the exponential limit of min-type bounds.
struct LimitNormalization {
    double location = 0.0;  ///< c_K, always 0 here
    double scale;           ///< d_K
};

/// d_K = a / (K - 1) (upper) or a / (K (K - 1)) (lower). K >= 2.
LimitNormalization normalizer(int hop_count, double a, BoundSide side);

LimitNormalization normalizer(int hop_count, double lambda, double eta, double noise_variance,
                              double snr_scale, BoundSide side,
                              ShapeVariant variant = ShapeVariant::exact);

/// 1 - exp(-u), u >= 0.
double limiting_cdf(double u);

/// exp(-u), u >= 0.
double limiting_pdf(double u);

/// Small-SNR behaviour f(gamma) ~ b gamma^t of the end-to-end PDF and the
/// resulting high-SNR outage slope and offset.
struct GainExpansion {
    double exponent;        ///< t
    double coefficient;     ///< b = (K - 1) / a
    double diversity_gain;  ///< t + 1
    double coding_gain;     ///< 2 p a / (K - 1)
};

GainExpansion gains(int hop_count, double lambda, double eta, double noise_variance,
                    double constellation_const, double snr_scale = 1.0,
                    ShapeVariant variant = ShapeVariant::exact);

/// x = (K - 1) / a, the argument of the rate formulas.
double rate_argument(int hop_count, double a);

/// Rate from the limiting exponential law of the upper SNR bound,
/// e^x E1(x) / (K ln 2), x = rate_argument(K, a). Bit/s/Hz.
double rate_bound(int hop_count, double a);

double rate_bound(int hop_count, double lambda, double eta, double noise_variance,
                  double snr_scale, ShapeVariant variant = ShapeVariant::exact);

/// Small-x form (-euler_gamma + ln(1/x)) / (K ln 2) of rate_bound.
double rate_approx(int hop_count, double a);

double rate_approx(int hop_count, double lambda, double eta, double noise_variance,
                   double snr_scale, ShapeVariant variant = ShapeVariant::exact);

/// rate_approx is trusted only below this x.
inline constexpr double kRateApproxMaxArgument = 0.01;

inline bool rate_approx_valid(double x) { return x < kRateApproxMaxArgument; }

/// Exact two-hop rate
///   (1 / (4 ln 2)) int_0^inf (1+g)^-1 (1+g/a1)^-1 (1+g/a2)^-1 2F1(1,1;3;x(g)) dg
/// by adaptive Gauss-Kronrod on g = u / (1 - u). Relative error <= 1e-6;
/// throws NumericalFailure otherwise.
double rate_k2(double a1, double a2);

}  // namespace ssrelay::analysis
