#pragma once

#include <complex>
#include <vector>

#include "caputo/coefficients.hpp"
#include "caputo/special_functions.hpp"

namespace caputo {

/// Uniform time grid on [0, horizon] with `steps` intervals.
struct TimeGrid {
    double horizon;
    int steps;
    TimeGrid(double horizon_, int steps_);
    double dt() const { return horizon / steps; }
    double node(int n) const { return n * dt(); }
};

/// The scalar parametric problem: fractional order, spectral parameter
/// lambda, and the sector the parameter must respect. lambda = 0 or
/// -lambda within the closed sector of half-angle phi0.
struct ScalarProblem {
    FractionalOrder order;
    Complex lambda;
    SectorConfig sector;
    ScalarProblem(FractionalOrder order_, Complex lambda_, SectorConfig sector_);
};

struct ScalarTrajectory {
    TimeGrid grid;
    std::vector<Complex> values;  ///< values[n] approximates the solution at node n
};

/// Implicit weighted-memory recurrence for the scalar problem; v_0 = 1.
ScalarTrajectory solve_scalar(const ScalarProblem& problem, const TimeGrid& grid);

/// Exact solution E_alpha(lambda t^alpha).
Complex exact_scalar(const ScalarProblem& problem, double t, double tol = 1e-12);

struct DecayRow {
    int n;
    double magnitude;     ///< |v_n|
    double bound_ratio;   ///< |v_n| * |lambda| dt^alpha * n^{s(alpha)}
};

struct DecayReport {
    std::vector<DecayRow> rows;
    double supremum = 0.0;
    double final_decade_slope = 0.0;     ///< log-log slope of the ratio on [N/10, N]
    double previous_decade_slope = 0.0;  ///< same on [N/100, N/10]
    bool bounded = false;
};

/// Normalized decay profile of the trajectory. Requires lambda != 0. The
/// sequence counts as bounded when the final-decade slope is flat (<= 0.05)
/// or still decelerating against the previous decade.
DecayReport decay_study(const ScalarProblem& problem, const TimeGrid& grid);

struct ConvergenceRow {
    int steps;
    double error;            ///< |v_N - exact(horizon)|
    double empirical_order;  ///< slope against the previous row; NaN on the first
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double overall_order = 0.0;  ///< least-squares slope of log err vs log N
    double theoretical_rate = 0.0;
};

/// Error sweep over step counts at fixed horizon.
ConvergenceReport convergence_study(const ScalarProblem& problem, double horizon,
                                    const std::vector<int>& step_counts);

}  // namespace caputo
