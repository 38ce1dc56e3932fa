#pragma once

#include <complex>
#include <vector>

namespace caputo {

using Complex = std::complex<double>;

/// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
/// alpha must lie in (0,1]; alpha = 1 is admitted so that E_{1,1} = exp can
/// serve as a reference case.
struct MLParams {
    double alpha;
    double beta;
    MLParams(double alpha_, double beta_);
};

/// Half-angle of the sector containing the admissible spectral parameters.
struct SectorConfig {
    double phi0;
    explicit SectorConfig(double phi0_);
};

/// sin(pi*x) and cos(pi*x) with argument reduction done in exact integer
/// arithmetic, so the sign pattern is exact for large |x|.
double sin_pi(double x);
double cos_pi(double x);

/// Gamma function on the real line (Lanczos rational approximation plus the
/// reflection formula). Throws std::domain_error at the poles.
double gamma_fn(double x);

/// 1/Gamma(x); returns 0 at the poles instead of throwing.
double reciprocal_gamma(double x);

/// E_{alpha,beta}(z) with absolute error at most tol on the supported domain.
///
/// Branch layout: a certified power series wherever cancellation and tail can
/// be bounded below tol; a contour-kernel integral on the sector
/// |arg z| > alpha*pi away from the pole ray; the inverse-power asymptotic
/// expansion for large |z| outside the growth sector. Points where none of
/// the three can certify tol (large |z| inside the growth sector) raise
/// std::domain_error rather than returning a silently wrong value.
Complex mittag_leffler(const MLParams& p, Complex z, double tol);

/// m-th derivative of t -> E_alpha(lambda * t^alpha) evaluated at t > 0,
/// using d^m/dt^m E_alpha(lambda t^alpha) = t^{-m} E_{alpha,1-m}(lambda t^alpha).
Complex ml_derivative(int order_m, double alpha, Complex lambda, double t, double tol);

/// Gauss hypergeometric function F(a,b;c;x) for x in [0,1]. The point x = 1
/// is admitted when c - a - b > 0 (Gauss limit); otherwise std::domain_error.
double gauss_2f1(double a, double b, double c, double x, double tol);

/// Incomplete beta function B_x(p,q) = int_0^x t^{p-1}(1-t)^{q-1} dt for
/// p,q > 0 and x in [0,1], evaluated through the hypergeometric identity
/// B_x(p,q) = x^p F(p,1-q;p+1;x)/p with reflection for x > 1/2.
double incomplete_beta(double p, double q, double x);

/// Signed binomial weights w_j = (-1)^j C(alpha,j), j = 0..n, by the stable
/// multiplicative recurrence w_j = w_{j-1} (j-1-alpha)/j.
std::vector<double> gl_weights(double alpha, int n);

}  // namespace caputo
