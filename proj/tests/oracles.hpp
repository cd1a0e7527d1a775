// Independent oracles used by the test suites. Everything here deliberately
// avoids the library's simulation / root-finding code paths.
#pragma once

#include <functional>
#include <optional>

#include "sostiae/simulate.hpp"

namespace oracles {

/// Routh-Hurwitz sign test on a polynomial with positive leading coefficient.
/// Returns nullopt when a pivot is too close to zero to decide (marginal).
std::optional<bool> routh_hurwitz_stable(const sostiae::Polynomial& p);

/// Adaptive Dormand-Prince RK45 unit-step response of xdot = A x + B, y = C x + D,
/// sampled at the grid points, local tolerance ~1e-10.
std::vector<double> rk45_step_response(const sostiae::StateSpace& ss,
                                       const sostiae::TimeGrid& grid);

struct GridSearchResult {
    double kp = 0.0;
    double ki = 0.0;
    double objective = 0.0;
};

/// Exhaustive search of f over kp, ki in [0, kmax] with the given step.
GridSearchResult grid_search_pi(const std::function<double(double, double)>& f,
                                double kmax, double step);

}  // namespace oracles
