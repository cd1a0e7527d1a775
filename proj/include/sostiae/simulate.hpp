#pragma once

#include <vector>

#include "sostiae/state_space.hpp"

namespace sostiae {

/// Uniform grid t_k = k*dt, k = 0..n_points-1.
struct TimeGrid {
    double dt = 0.01;
    int n_points = 2;

    double t(int k) const { return k * dt; }
    double end() const { return (n_points - 1) * dt; }

    /// Inclusive grid 0:dt:t_end (t_end rounded to the nearest multiple of dt).
    static TimeGrid from_horizon(double t_end, double dt = 0.01);

    /// The default tuning grid: 0:0.01:5*ts.
    static TimeGrid default_for(double ts);

    bool operator==(const TimeGrid& o) const {
        return dt == o.dt && n_points == o.n_points;
    }
};

/// Sampled output over a TimeGrid. `overflow` marks the first sample where
/// |y| exceeded 1e6 (or went non-finite); samples from there on are clamped
/// to +/-1e6 so downstream integrals stay finite and large.
struct ResponseTrace {
    TimeGrid grid;
    std::vector<double> y;
    bool overflow = false;
    int overflow_index = -1;
};

inline constexpr double kOverflowLimit = 1e6;

/// Zero-order-hold discretization: Ad = exp(A dt), Bd = int_0^dt exp(A tau) dtau B,
/// computed jointly from the exponential of the augmented matrix [[A,B],[0,0]]*dt.
struct DiscreteStateSpace {
    Eigen::MatrixXd Ad;
    Eigen::VectorXd Bd;
    Eigen::RowVectorXd C;
    double D = 0.0;
};

DiscreteStateSpace discretize_zoh(const StateSpace& ss, double dt);

/// Unit step response from rest, exact at grid points up to the matrix
/// exponential accuracy. y_0 = D for biproper systems.
ResponseTrace step_response(const TransferFunction& tf, const TimeGrid& grid);
ResponseTrace step_response(const StateSpace& ss, const TimeGrid& grid);

/// Linear interpolation of an external trajectory onto the grid.
/// Throws CoverageError when the raw samples do not span the grid.
ResponseTrace resample(const std::vector<double>& raw_t, const std::vector<double>& raw_y,
                       const TimeGrid& grid);

}  // namespace sostiae
