#include "sostiae/simulate.hpp"

#include <cmath>

#include "sostiae/linalg.hpp"

namespace sostiae {

TimeGrid TimeGrid::from_horizon(double t_end, double dt) {
    if (!(dt > 0.0) || !(t_end > 0.0)) {
        throw DomainError("time grid needs dt > 0 and a positive horizon");
    }
    int n = static_cast<int>(std::lround(t_end / dt)) + 1;
    if (n < 2) {
        throw DomainError("time grid needs at least two points");
    }
    return TimeGrid{dt, n};
}

TimeGrid TimeGrid::default_for(double ts) {
    return from_horizon(5.0 * ts, 0.01);
}

DiscreteStateSpace discretize_zoh(const StateSpace& ss, double dt) {
    if (!(dt > 0.0)) {
        throw DomainError("ZOH discretization needs dt > 0");
    }
    const int n = ss.order();
    DiscreteStateSpace d;
    d.C = ss.C;
    d.D = ss.D;
    if (n == 0) {
        d.Ad = Eigen::MatrixXd(0, 0);
        d.Bd = Eigen::VectorXd(0);
        return d;
    }
    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + 1, n + 1);
    aug.topLeftCorner(n, n) = ss.A * dt;
    aug.topRightCorner(n, 1) = ss.B * dt;
    Eigen::MatrixXd E = expm(aug);
    d.Ad = E.topLeftCorner(n, n);
    d.Bd = E.topRightCorner(n, 1);
    return d;
}

ResponseTrace step_response(const StateSpace& ss, const TimeGrid& grid) {
    DiscreteStateSpace d = discretize_zoh(ss, grid.dt);
    const int n = ss.order();

    ResponseTrace trace;
    trace.grid = grid;
    trace.y.resize(grid.n_points);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < grid.n_points; ++k) {
        double y = (n > 0 ? d.C.dot(x) : 0.0) + d.D;
        if (!std::isfinite(y) || std::abs(y) > kOverflowLimit) {
            trace.overflow = true;
            trace.overflow_index = k;
            double fill = (std::isfinite(y) && y < 0.0) ? -kOverflowLimit : kOverflowLimit;
            for (int j = k; j < grid.n_points; ++j) {
                trace.y[j] = fill;
            }
            return trace;
        }
        trace.y[k] = y;
        if (n > 0) {
            x = d.Ad * x + d.Bd;  // unit step input
        }
    }
    return trace;
}

ResponseTrace step_response(const TransferFunction& tf, const TimeGrid& grid) {
    return step_response(tf_to_ss(tf), grid);
}

ResponseTrace resample(const std::vector<double>& raw_t, const std::vector<double>& raw_y,
                       const TimeGrid& grid) {
    if (raw_t.size() != raw_y.size() || raw_t.size() < 2) {
        throw DomainError("trajectory needs matching t/y arrays with at least two samples");
    }
    for (std::size_t i = 1; i < raw_t.size(); ++i) {
        if (!(raw_t[i] > raw_t[i - 1])) {
            throw DomainError("trajectory time stamps must be strictly increasing");
        }
    }
    if (raw_t.front() > grid.dt || raw_t.back() < grid.end() - 1e-12) {
        throw CoverageError("trajectory does not span the time grid; no extrapolation performed");
    }

    ResponseTrace trace;
    trace.grid = grid;
    trace.y.resize(grid.n_points);
    std::size_t seg = 0;
    for (int k = 0; k < grid.n_points; ++k) {
        double t = grid.t(k);
        if (t <= raw_t.front()) {
            trace.y[k] = raw_y.front();  // at most one grid point sits before the first sample
            continue;
        }
        while (seg + 2 < raw_t.size() && raw_t[seg + 1] < t) {
            ++seg;
        }
        if (t == raw_t[seg + 1]) {
            trace.y[k] = raw_y[seg + 1];  // exact sample: no interpolation round-off
            continue;
        }
        double w = (t - raw_t[seg]) / (raw_t[seg + 1] - raw_t[seg]);
        w = std::min(w, 1.0);
        trace.y[k] = raw_y[seg] + w * (raw_y[seg + 1] - raw_y[seg]);
    }
    return trace;
}

}  // namespace sostiae
