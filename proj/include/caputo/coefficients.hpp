#pragma once

#include <vector>

namespace caputo {

/// Fractional order alpha in (0,1) together with the rate slack epsilon and
/// the derived convergence-rate exponent: alpha below 1/2, otherwise
/// 1 - alpha - epsilon.
struct FractionalOrder {
    double alpha;
    double epsilon;
    double s_alpha;
    explicit FractionalOrder(double alpha_, double epsilon_ = 0.05);
};

/// One row of scheme coefficients: the quadrature weights b_{1..n} of the
/// memory kernel and the assembled weights a_{0..n}. Invariants established
/// by coefficient_row: all b positive, a[0] < 0, a[1..n-1] <= 0, a[n] > 0,
/// and sum_j a[j] = 0 up to roundoff.
struct CoefficientTable {
    int n = 0;
    std::vector<double> b;  ///< b[j-1] holds b_{jn}, 1 <= j <= n
    std::vector<double> a;  ///< a[j] holds a_{jn}, 0 <= j <= n
};

/// Kernel weight b_{jn} = B_{j/n}(alpha,1-alpha) - B_{(j-1)/n}(alpha,1-alpha).
double b_coeff(double alpha, int j, int n);

/// Full coefficient row for step n.
CoefficientTable coefficient_row(double alpha, int n);

/// Result of a coefficient inequality check: whether it holds and the signed
/// slack (right side minus left side).
struct InequalityCheck {
    bool holds = false;
    double margin = 0.0;
};

/// Checks sum_{j=1}^{n-1} |a_jn| / j^{1-alpha-eps} <= a_nn / n^{1-alpha-eps},
/// the dominance inequality behind the decay estimates. Requires n >= 2 and
/// 0 < epsilon < 1 - alpha.
InequalityCheck check_coefficient_dominance(double alpha, double epsilon, int n);

/// The sharper variant for alpha < 1/2 with the weight j^alpha:
/// sum_{j=1}^{n-1} |a_jn| / j^alpha <= a_nn / n^alpha. epsilon is accepted
/// for interface symmetry; the inequality itself does not involve it.
InequalityCheck check_coefficient_dominance_small_alpha(double alpha, double epsilon,
                                                        int n);

}  // namespace caputo
