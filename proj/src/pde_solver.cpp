#include "caputo/pde_solver.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>

namespace caputo {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fourier sine coefficients of the named profiles on [0,1].
double sine_coefficient(const InitialCondition& ic, int k, int intervals) {
    switch (ic.kind) {
        case InitialCondition::Kind::poly:
            // f(s) = s^2(s-1): 2 int_0^1 f sin(k pi s) ds = (4 + 8(-1)^k)/(k pi)^3
            return (4.0 + 8.0 * ((k % 2 == 0) ? 1.0 : -1.0)) / std::pow(k * kPi, 3);
        case InitialCondition::Kind::sine:
            return (k == 2) ? 1.0 : 0.0;
        case InitialCondition::Kind::samples: {
            // composite Simpson over the sample grid (intervals is even for
            // every grid used here; fall back to trapezoid otherwise)
            const int M = static_cast<int>(ic.samples.size()) - 1;
            const double h = 1.0 / M;
            auto g = [&](int i) {
                return ic.samples[i] * std::sin(k * kPi * (static_cast<double>(i) / M));
            };
            double sum = 0.0;
            if (M % 2 == 0) {
                for (int i = 1; i < M; i += 2) sum += 4.0 * g(i);
                for (int i = 2; i < M; i += 2) sum += 2.0 * g(i);
                sum = (sum + g(0) + g(M)) * h / 3.0;
            } else {
                for (int i = 1; i < M; ++i) sum += g(i);
                sum = (sum + 0.5 * (g(0) + g(M))) * h;
            }
            (void)intervals;
            return 2.0 * sum;
        }
    }
    return 0.0;
}

}  // namespace

std::vector<double> solve_tridiagonal(const TridiagonalMatrix& m,
                                      const std::vector<double>& rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n)
        throw std::invalid_argument("solve_tridiagonal: size mismatch");
    std::vector<double> c_star(n), d_star(n), x(n);
    if (m.diag[0] == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
    c_star[0] = m.upper[0] / m.diag[0];
    d_star[0] = rhs[0] / m.diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double denom = m.diag[i] - m.lower[i] * c_star[i - 1];
        if (denom == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
        c_star[i] = (i + 1 < n) ? m.upper[i] / denom : 0.0;
        d_star[i] = (rhs[i] - m.lower[i] * d_star[i - 1]) / denom;
    }
    x[n - 1] = d_star[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d_star[i] - c_star[i] * x[i + 1];
    return x;
}

std::vector<double> tridiagonal_apply(const TridiagonalMatrix& m,
                                      const std::vector<double>& x) {
    const std::size_t n = m.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = m.diag[i] * x[i];
        if (i > 0) v += m.lower[i] * x[i - 1];
        if (i + 1 < n) v += m.upper[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

EllipticOperator1D::EllipticOperator1D(double a0_, std::function<double(double)> drift_,
                                       std::function<double(double)> reaction_,
                                       int intervals_)
    : a0(a0_), drift(std::move(drift_)), reaction(std::move(reaction_)),
      intervals(intervals_) {
    if (!(a0 > 0.0))
        throw std::invalid_argument("EllipticOperator1D: a0 must be > 0");
    if (intervals < 2)
        throw std::invalid_argument("EllipticOperator1D: need at least 2 intervals");
    if (!drift || !reaction)
        throw std::invalid_argument("EllipticOperator1D: missing coefficient function");
}

SpatialField::SpatialField(int intervals)
    : values(static_cast<std::size_t>(intervals) + 1, 0.0) {
    if (intervals < 2) throw std::invalid_argument("SpatialField: need at least 2 intervals");
}

SpatialField::SpatialField(std::vector<double> values_) : values(std::move(values_)) {
    if (values.size() < 3)
        throw std::invalid_argument("SpatialField: need at least 3 nodes");
    if (values.front() != 0.0 || values.back() != 0.0)
        throw std::invalid_argument("SpatialField: boundary values must be zero");
}

SpatialField make_initial_field(const InitialCondition& ic, int intervals) {
    SpatialField f(intervals);
    switch (ic.kind) {
        case InitialCondition::Kind::poly:
            for (int i = 1; i < intervals; ++i) {
                const double s = static_cast<double>(i) / intervals;
                f.values[i] = s * s * (s - 1.0);
            }
            break;
        case InitialCondition::Kind::sine:
            for (int i = 1; i < intervals; ++i) {
                const double s = static_cast<double>(i) / intervals;
                f.values[i] = std::sin(2.0 * kPi * s);
            }
            break;
        case InitialCondition::Kind::samples:
            if (static_cast<int>(ic.samples.size()) != intervals + 1)
                throw std::invalid_argument("make_initial_field: sample count mismatch");
            f = SpatialField(ic.samples);
            break;
    }
    return f;
}

TridiagonalMatrix assemble_operator(const EllipticOperator1D& op) {
    const int M = op.intervals;
    const double h = op.h();
    const double diffusion = op.a0 * op.a0 / (h * h);
    TridiagonalMatrix m;
    m.lower.resize(M - 1);
    m.diag.resize(M - 1);
    m.upper.resize(M - 1);
    for (int i = 1; i < M; ++i) {
        const double s = op.node(i);
        const double advect = op.drift(s) / (2.0 * h);
        m.lower[i - 1] = diffusion + advect;
        m.diag[i - 1] = -2.0 * diffusion - op.reaction(s);
        m.upper[i - 1] = diffusion - advect;
    }
    return m;
}

namespace {

// (scale I - dt^alpha A) on the interior, used by both schemes
TridiagonalMatrix shifted_system(const TridiagonalMatrix& op, double dt_alpha,
                                 double scale) {
    TridiagonalMatrix sys;
    const std::size_t n = op.size();
    sys.lower.resize(n);
    sys.diag.resize(n);
    sys.upper.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        sys.lower[i] = -dt_alpha * op.lower[i];
        sys.diag[i] = scale - dt_alpha * op.diag[i];
        sys.upper[i] = -dt_alpha * op.upper[i];
    }
    return sys;
}

std::atomic<bool> g_dominance_warned{false};

void warn_if_not_dominant(const TridiagonalMatrix& sys) {
    if (g_dominance_warned.load(std::memory_order_relaxed)) return;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        double off = std::abs(sys.upper[i]);
        if (i > 0) off += std::abs(sys.lower[i]);
        if (std::abs(sys.diag[i]) < off) {
            if (!g_dominance_warned.exchange(true, std::memory_order_relaxed))
                std::cerr << "caputo: implicit system lost diagonal dominance at row "
                          << i << "\n";
            return;
        }
    }
}

std::vector<double> interior_of(const SpatialField& f) {
    return std::vector<double>(f.values.begin() + 1, f.values.end() - 1);
}

SpatialField field_from_interior(const std::vector<double>& interior) {
    std::vector<double> v(interior.size() + 2, 0.0);
    std::copy(interior.begin(), interior.end(), v.begin() + 1);
    return SpatialField(std::move(v));
}

}  // namespace

SpatialField weighted_scheme_step(const std::vector<SpatialField>& history,
                                  const CoefficientTable& row,
                                  const TridiagonalMatrix& op, double dt, double alpha) {
    const int n = static_cast<int>(history.size());
    if (n < 1) throw std::invalid_argument("weighted_scheme_step: empty history");
    if (row.n != n)
        throw std::invalid_argument("weighted_scheme_step: coefficient row mismatch");

    const std::size_t interior = op.size();
    std::vector<double> rhs(interior, 0.0);
    for (int j = 0; j < n; ++j) {
        const double w = row.a[j];
        const std::vector<double>& u = history[j].values;
        for (std::size_t i = 0; i < interior; ++i) rhs[i] -= w * u[i + 1];
    }
    const TridiagonalMatrix sys =
        shifted_system(op, std::pow(dt, alpha), row.a[row.n]);
    warn_if_not_dominant(sys);
    return field_from_interior(solve_tridiagonal(sys, rhs));
}

FieldHistory run_weighted_scheme(const EllipticOperator1D& op, const SpatialField& f,
                                 double alpha, const TimeGrid& grid) {
    if (f.intervals() != op.intervals)
        throw std::invalid_argument("run_weighted_scheme: grid mismatch");
    const TridiagonalMatrix a = assemble_operator(op);
    FieldHistory history{grid, {}, SchemeTag::main};
    history.fields.reserve(grid.steps + 1);
    history.fields.push_back(f);
    for (int n = 1; n <= grid.steps; ++n) {
        const CoefficientTable row = coefficient_row(alpha, n);
        history.fields.push_back(
            weighted_scheme_step(history.fields, row, a, grid.dt(), alpha));
    }
    return history;
}

FieldHistory run_grunwald_scheme(const EllipticOperator1D& op, const SpatialField& f,
                                 double alpha, const TimeGrid& grid) {
    if (f.intervals() != op.intervals)
        throw std::invalid_argument("run_grunwald_scheme: grid mismatch");
    const TridiagonalMatrix a = assemble_operator(op);
    const double dt_alpha = std::pow(grid.dt(), alpha);
    const std::vector<double> w = gl_weights(alpha, grid.steps);
    const std::vector<double> f_int = interior_of(f);
    const std::size_t interior = f_int.size();

    FieldHistory history{grid, {}, SchemeTag::comparison};
    history.fields.reserve(grid.steps + 1);
    history.fields.push_back(f);

    const TridiagonalMatrix sys = shifted_system(a, dt_alpha, w[0]);
    warn_if_not_dominant(sys);

    double op_norm = 1.0;  // max row sum of |A|, the roundoff scale of A u
    for (std::size_t i = 0; i < interior; ++i) {
        double row = std::abs(a.diag[i]) + std::abs(a.upper[i]);
        if (i > 0) row += std::abs(a.lower[i]);
        op_norm = std::max(op_norm, row);
    }

    for (int n = 1; n <= grid.steps; ++n) {
        // w_0 u_n - dt^alpha A u_n = w_0 f - sum_{j>=1} w_j (u_{n-j} - f)
        std::vector<double> memory(interior, 0.0);
        for (int j = 1; j <= n; ++j) {
            const std::vector<double>& u = history.fields[n - j].values;
            for (std::size_t i = 0; i < interior; ++i)
                memory[i] += w[j] * (u[i + 1] - f_int[i]);
        }
        std::vector<double> rhs(interior);
        for (std::size_t i = 0; i < interior; ++i)
            rhs[i] = w[0] * f_int[i] - memory[i];
        const std::vector<double> u_n = solve_tridiagonal(sys, rhs);

        // residual of the defining relation relative to the operator scale
        // ||A|| max(1, ||u_n||), the floor below which the residual cannot be
        // evaluated in floating point
        const std::vector<double> au = tridiagonal_apply(a, u_n);
        double res = 0.0, u_max = 0.0;
        for (std::size_t i = 0; i < interior; ++i) {
            const double lhs = (w[0] * (u_n[i] - f_int[i]) + memory[i]) / dt_alpha;
            res = std::max(res, std::abs(lhs - au[i]));
            u_max = std::max(u_max, std::abs(u_n[i]));
        }
        const double rel = res / (op_norm * std::max(1.0, u_max));
        if (rel > 1e-12) {
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "run_grunwald_scheme: step residual %.3e exceeds 1e-12 "
                          "at n = %d", rel, n);
            throw std::runtime_error(msg);
        }

        history.fields.push_back(field_from_interior(u_n));
    }
    return history;
}

SpatialField spectral_reference(const EllipticOperator1D& op, const InitialCondition& ic,
                                double alpha, double horizon, int n_modes) {
    if (n_modes < 1)
        throw std::invalid_argument("spectral_reference: need at least one mode");
    // the eigenfunction series is only valid for the pure Laplacian
    const int M = op.intervals;
    if (std::abs(op.a0 - 1.0) > 1e-14)
        throw std::invalid_argument("spectral_reference: requires a0 = 1");
    for (int i = 0; i <= M; ++i) {
        const double s = op.node(i);
        if (std::abs(op.drift(s)) > 1e-14 || std::abs(op.reaction(s)) > 1e-14)
            throw std::invalid_argument(
                "spectral_reference: requires b = 0 and c = 0 (pure Laplacian)");
    }

    const double t_alpha = std::pow(horizon, alpha);
    SpatialField u(M);
    for (int k = 1; k <= n_modes; ++k) {
        const double fk = sine_coefficient(ic, k, M);
        if (fk == 0.0) continue;
        const Complex ek = mittag_leffler(MLParams(alpha, 1.0),
                                          Complex(-kPi * kPi * k * k * t_alpha, 0.0),
                                          1e-13);
        const double amplitude = fk * ek.real();
        for (int i = 1; i < M; ++i)
            u.values[i] += amplitude * std::sin(k * kPi * op.node(i));
    }
    return u;
}

double sectorial_angle(const EllipticOperator1D& op, int search_points) {
    if (search_points < 3)
        throw std::invalid_argument("sectorial_angle: need at least 3 search points");
    const double fd_step = 1e-6;
    auto drift_slope = [&](double s) {
        if (s < fd_step) return (-3.0 * op.drift(0.0) + 4.0 * op.drift(fd_step) -
                                 op.drift(2.0 * fd_step)) / (2.0 * fd_step);
        if (s > 1.0 - fd_step)
            return (3.0 * op.drift(1.0) - 4.0 * op.drift(1.0 - fd_step) +
                    op.drift(1.0 - 2.0 * fd_step)) / (2.0 * fd_step);
        return (op.drift(s + fd_step) - op.drift(s - fd_step)) / (2.0 * fd_step);
    };
    auto objective = [&](double s) {
        const double damping = 2.0 * op.reaction(s) - drift_slope(s);
        if (damping <= 0.0)
            throw std::domain_error(
                "sectorial_angle: 2c(s) - b'(s) must stay positive, violated at s = " +
                std::to_string(s));
        return std::abs(op.drift(s)) *
               std::max(1.0 / (2.0 * op.a0 * op.a0), 1.0 / damping);
    };

    // zero drift: the numerator vanishes identically and the angle is 0,
    // independent of the damping term
    bool drift_everywhere_zero = true;
    for (int i = 0; i < search_points; ++i) {
        if (op.drift(static_cast<double>(i) / (search_points - 1)) != 0.0) {
            drift_everywhere_zero = false;
            break;
        }
    }
    if (drift_everywhere_zero) return 0.0;

    double best = 0.0;
    int best_idx = 0;
    for (int i = 0; i < search_points; ++i) {
        const double s = static_cast<double>(i) / (search_points - 1);
        const double v = objective(s);
        if (v > best) {
            best = v;
            best_idx = i;
        }
    }
    // local parabolic refinement unless the maximum sits on the boundary
    if (best_idx > 0 && best_idx < search_points - 1) {
        double step = 1.0 / (search_points - 1);
        double center = static_cast<double>(best_idx) / (search_points - 1);
        for (int round = 0; round < 3; ++round) {
            const double fm = objective(center - step);
            const double f0 = objective(center);
            const double fp = objective(center + step);
            const double denom = fm - 2.0 * f0 + fp;
            if (denom < 0.0) {
                const double shift = 0.5 * (fm - fp) / denom;
                center = std::clamp(center + shift * step, step, 1.0 - step);
            }
            step *= 0.25;
            best = std::max({best, objective(center), f0});
        }
    }
    return std::atan(best);
}

double field_norm(const SpatialField& u) {
    const int M = u.intervals();
    double sum = 0.5 * (u.values.front() * u.values.front() +
                        u.values.back() * u.values.back());
    for (int i = 1; i < M; ++i) sum += u.values[i] * u.values[i];
    return std::sqrt(sum / M);
}

}  // namespace caputo
