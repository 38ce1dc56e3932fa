#include "caputo/coefficients.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "caputo/special_functions.hpp"

namespace caputo {

FractionalOrder::FractionalOrder(double alpha_, double epsilon_)
    : alpha(alpha_), epsilon(epsilon_) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("FractionalOrder: alpha must lie in (0,1)");
    if (!(epsilon > 0.0) || !(epsilon < 1.0 - alpha))
        throw std::invalid_argument(
            "FractionalOrder: epsilon must lie in (0, 1 - alpha)");
    s_alpha = (alpha < 0.5) ? alpha : 1.0 - alpha - epsilon;
}

double b_coeff(double alpha, int j, int n) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("b_coeff: alpha must lie in (0,1)");
    if (n < 1 || j < 1 || j > n)
        throw std::invalid_argument("b_coeff: need 1 <= j <= n, got j=" +
                                    std::to_string(j) + ", n=" + std::to_string(n));
    const double q = 1.0 - alpha;
    return incomplete_beta(alpha, q, static_cast<double>(j) / n) -
           incomplete_beta(alpha, q, static_cast<double>(j - 1) / n);
}

CoefficientTable coefficient_row(double alpha, int n) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("coefficient_row: alpha must lie in (0,1)");
    if (n < 1) throw std::invalid_argument("coefficient_row: n must be >= 1");

    CoefficientTable table;
    table.n = n;
    table.b.resize(n);
    table.a.resize(n + 1);

    // b_{jn} as consecutive differences of the incomplete beta function; one
    // evaluation per node rather than two per weight.
    const double q = 1.0 - alpha;
    double prev = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double cur = (j == n) ? incomplete_beta(alpha, q, 1.0)
                                    : incomplete_beta(alpha, q, static_cast<double>(j) / n);
        table.b[j - 1] = cur - prev;
        prev = cur;
    }

    const double scale = alpha / gamma_fn(1.0 - alpha);
    // c_j = b_{jn} / (j^alpha - (j-1)^alpha)
    std::vector<double> c(n);
    double pow_prev = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double pow_cur = std::pow(static_cast<double>(j), alpha);
        c[j - 1] = table.b[j - 1] / (pow_cur - pow_prev);
        pow_prev = pow_cur;
    }
    table.a[0] = -scale * table.b[0];
    for (int j = 1; j < n; ++j) table.a[j] = scale * (c[j - 1] - c[j]);
    table.a[n] = scale * c[n - 1];
    return table;
}

namespace {

InequalityCheck dominance_with_weight(double alpha, double weight_exponent, int n) {
    const CoefficientTable row = coefficient_row(alpha, n);
    double lhs = 0.0;
    for (int j = 1; j <= n - 1; ++j)
        lhs += std::abs(row.a[j]) / std::pow(static_cast<double>(j), weight_exponent);
    const double rhs = row.a[n] / std::pow(static_cast<double>(n), weight_exponent);
    return InequalityCheck{lhs <= rhs, rhs - lhs};
}

}  // namespace

InequalityCheck check_coefficient_dominance(double alpha, double epsilon, int n) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0 - alpha))
        throw std::invalid_argument(
            "check_coefficient_dominance: epsilon must lie in (0, 1 - alpha)");
    if (n < 2)
        throw std::invalid_argument("check_coefficient_dominance: n must be >= 2");
    return dominance_with_weight(alpha, 1.0 - alpha - epsilon, n);
}

InequalityCheck check_coefficient_dominance_small_alpha(double alpha, double /*epsilon*/,
                                                        int n) {
    if (!(alpha < 0.5))
        throw std::invalid_argument(
            "check_coefficient_dominance_small_alpha: requires alpha < 1/2");
    if (n < 2)
        throw std::invalid_argument(
            "check_coefficient_dominance_small_alpha: n must be >= 2");
    return dominance_with_weight(alpha, alpha, n);
}

}  // namespace caputo
