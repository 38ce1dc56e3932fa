#pragma once

#include <functional>
#include <vector>

#include "caputo/coefficients.hpp"
#include "caputo/scalar_scheme.hpp"

namespace caputo {

/// Tridiagonal matrix over the interior nodes of a uniform grid.
struct TridiagonalMatrix {
    std::vector<double> lower;  ///< lower[i] multiplies u_{i-1}; lower[0] unused
    std::vector<double> diag;
    std::vector<double> upper;  ///< upper[i] multiplies u_{i+1}; last entry unused
    std::size_t size() const { return diag.size(); }
};

/// Thomas solve of A x = rhs. No pivoting; throws std::runtime_error on a
/// vanishing pivot.
std::vector<double> solve_tridiagonal(const TridiagonalMatrix& m,
                                      const std::vector<double>& rhs);

std::vector<double> tridiagonal_apply(const TridiagonalMatrix& m,
                                      const std::vector<double>& x);

/// Second-order elliptic operator a0^2 u'' - b(s) u' - c(s) u on [0,1] with
/// homogeneous Dirichlet conditions, discretized on M uniform intervals.
struct EllipticOperator1D {
    double a0;
    std::function<double(double)> drift;     ///< b(s)
    std::function<double(double)> reaction;  ///< c(s)
    int intervals;                           ///< M >= 2
    EllipticOperator1D(double a0_, std::function<double(double)> drift_,
                       std::function<double(double)> reaction_, int intervals_);
    double h() const { return 1.0 / intervals; }
    double node(int i) const { return static_cast<double>(i) / intervals; }
};

/// Grid function on the M+1 nodes; Dirichlet values pinned to zero at both
/// ends.
struct SpatialField {
    std::vector<double> values;
    explicit SpatialField(int intervals);
    explicit SpatialField(std::vector<double> values_);
    int intervals() const { return static_cast<int>(values.size()) - 1; }
};

/// The two initial profiles of the experiment suite plus free-form samples.
struct InitialCondition {
    enum class Kind { poly, sine, samples };
    Kind kind;
    std::vector<double> samples;  ///< used when kind == samples

    static InitialCondition poly() { return {Kind::poly, {}}; }
    static InitialCondition sine() { return {Kind::sine, {}}; }
    static InitialCondition from_samples(std::vector<double> v) {
        return {Kind::samples, std::move(v)};
    }
};

/// Samples the initial profile on the grid: poly is s^2(s-1), sine is
/// sin(2 pi s).
SpatialField make_initial_field(const InitialCondition& ic, int intervals);

enum class SchemeTag { main, comparison };

struct FieldHistory {
    TimeGrid grid;
    std::vector<SpatialField> fields;
    SchemeTag tag;
    const SpatialField& back() const { return fields.back(); }
};

/// Central-difference discretization of the operator on the interior nodes.
TridiagonalMatrix assemble_operator(const EllipticOperator1D& op);

/// One implicit step of the weighted-memory scheme: solves
/// (a_nn I - dt^alpha A) u_n = -sum_{j<n} a_jn u_j on the interior.
SpatialField weighted_scheme_step(const std::vector<SpatialField>& history,
                                  const CoefficientTable& row,
                                  const TridiagonalMatrix& op, double dt, double alpha);

/// Full run of the weighted-memory scheme from initial field f.
FieldHistory run_weighted_scheme(const EllipticOperator1D& op, const SpatialField& f,
                                 double alpha, const TimeGrid& grid);

/// Full run of the signed-binomial comparison scheme. Every step is verified
/// against the defining relation by a residual check relative to the operator
/// scale; a violation beyond 1e-12 is a hard error.
FieldHistory run_grunwald_scheme(const EllipticOperator1D& op, const SpatialField& f,
                                 double alpha, const TimeGrid& grid);

/// Eigenfunction-series solution of the pure-Laplacian problem (a0 = 1,
/// b = c = 0) at time `horizon`, truncated after n_modes modes.
SpatialField spectral_reference(const EllipticOperator1D& op, const InitialCondition& ic,
                                double alpha, double horizon, int n_modes);

/// Smallest admissible sector half-angle for the operator:
/// atan(max_s |b(s)| max{1/(2 a0^2), 1/(2c(s) - b'(s))}), located by a dense
/// grid search with local parabolic refinement. Requires 2c - b' > 0 on the
/// grid.
double sectorial_angle(const EllipticOperator1D& op, int search_points = 100001);

/// Discrete L2 norm by the composite trapezoidal rule.
double field_norm(const SpatialField& u);

}  // namespace caputo
