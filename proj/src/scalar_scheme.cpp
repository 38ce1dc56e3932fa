#include "caputo/scalar_scheme.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace caputo {

namespace {

// least-squares slope of log(y) against log(x)
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TimeGrid::TimeGrid(double horizon_, int steps_) : horizon(horizon_), steps(steps_) {
    if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: horizon must be > 0");
    if (steps < 1) throw std::invalid_argument("TimeGrid: steps must be >= 1");
}

ScalarProblem::ScalarProblem(FractionalOrder order_, Complex lambda_, SectorConfig sector_)
    : order(order_), lambda(lambda_), sector(sector_) {
    if (lambda != Complex(0.0, 0.0)) {
        const double arg = std::abs(std::arg(-lambda));
        if (arg > sector.phi0 + 1e-12)
            throw std::invalid_argument(
                "ScalarProblem: lambda must be 0 or lie in the reflected sector");
    }
}

ScalarTrajectory solve_scalar(const ScalarProblem& problem, const TimeGrid& grid) {
    const int N = grid.steps;
    const double alpha = problem.order.alpha;
    const Complex shift = problem.lambda * std::pow(grid.dt(), alpha);

    ScalarTrajectory traj{grid, std::vector<Complex>(N + 1)};
    traj.values[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        const CoefficientTable row = coefficient_row(alpha, n);
        Complex acc = 0.0;
        for (int j = 0; j < n; ++j) acc += row.a[j] * traj.values[j];
        traj.values[n] = -acc / (row.a[n] - shift);
    }
    return traj;
}

Complex exact_scalar(const ScalarProblem& problem, double t, double tol) {
    if (t < 0.0) throw std::invalid_argument("exact_scalar: t must be >= 0");
    if (t == 0.0 || problem.lambda == Complex(0.0, 0.0)) return 1.0;
    return mittag_leffler(MLParams(problem.order.alpha, 1.0),
                          problem.lambda * std::pow(t, problem.order.alpha), tol);
}

DecayReport decay_study(const ScalarProblem& problem, const TimeGrid& grid) {
    if (problem.lambda == Complex(0.0, 0.0))
        throw std::invalid_argument("decay_study: lambda must be nonzero");

    const ScalarTrajectory traj = solve_scalar(problem, grid);
    const double L = std::abs(problem.lambda) * std::pow(grid.dt(), problem.order.alpha);
    const double s = problem.order.s_alpha;
    const int N = grid.steps;

    DecayReport report;
    report.rows.reserve(N);
    for (int n = 1; n <= N; ++n) {
        const double mag = std::abs(traj.values[n]);
        const double ratio = mag * L * std::pow(static_cast<double>(n), s);
        report.rows.push_back({n, mag, ratio});
        report.supremum = std::max(report.supremum, ratio);
    }

    auto decade_slope = [&](int lo, int hi) {
        std::vector<double> xs, ys;
        for (const auto& r : report.rows) {
            if (r.n >= lo && r.n <= hi && r.bound_ratio > 0.0) {
                xs.push_back(r.n);
                ys.push_back(r.bound_ratio);
            }
        }
        if (xs.size() < 3) return 0.0;
        return loglog_slope(xs, ys);
    };
    report.final_decade_slope = decade_slope(N / 10, N);
    report.previous_decade_slope = decade_slope(N / 100, N / 10);
    report.bounded = std::isfinite(report.supremum) &&
                     (report.final_decade_slope <= 0.05 ||
                      report.final_decade_slope <= 0.95 * report.previous_decade_slope);
    return report;
}

ConvergenceReport convergence_study(const ScalarProblem& problem, double horizon,
                                    const std::vector<int>& step_counts) {
    if (step_counts.empty())
        throw std::invalid_argument("convergence_study: empty step list");
    int prev = 1;
    for (int n : step_counts) {
        if (n < 2 || n <= prev)
            throw std::invalid_argument(
                "convergence_study: step counts must be strictly increasing and >= 2");
        prev = n;
    }

    const Complex exact = exact_scalar(problem, horizon);
    ConvergenceReport report;
    report.theoretical_rate = problem.order.s_alpha;

    std::vector<double> ns, errs;
    double prev_err = 0.0;
    for (std::size_t i = 0; i < step_counts.size(); ++i) {
        const int N = step_counts[i];
        const ScalarTrajectory traj = solve_scalar(problem, TimeGrid(horizon, N));
        const double err = std::abs(traj.values.back() - exact);
        double order = std::numeric_limits<double>::quiet_NaN();
        if (i > 0 && err > 0.0 && prev_err > 0.0)
            order = std::log(prev_err / err) /
                    std::log(static_cast<double>(N) / step_counts[i - 1]);
        report.rows.push_back({N, err, order});
        if (err > 0.0) {
            ns.push_back(N);
            errs.push_back(err);
        }
        prev_err = err;
    }
    report.overall_order = (ns.size() >= 2) ? -loglog_slope(ns, errs) : 0.0;
    return report;
}

}  // namespace caputo
