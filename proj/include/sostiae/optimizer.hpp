#pragma once

#include <array>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "sostiae/metrics.hpp"
#include "sostiae/target.hpp"

namespace sostiae {

struct OptimOptions {
    int max_evals = 3000;
    PidGains x0{0.0, 0.0, 0.0};
    std::array<double, 3> lower{0.0, 0.0, 0.0};
    std::array<double, 3> upper{std::numeric_limits<double>::infinity(),
                                std::numeric_limits<double>::infinity(),
                                std::numeric_limits<double>::infinity()};
    double f_tol = 1e-6;
    double x_tol = 1e-6;
    bool pi_only = false;  // pins kd to exactly 0
};

struct OptimResult {
    PidGains gains;
    double objective = 0.0;
    int evals = 0;
    bool converged = false;
    std::vector<std::pair<int, double>> trace;  // (evals, best objective so far)
};

/// Objective of the tuner: IAE between the closed-loop step response of the
/// candidate gains and the target trace, on one shared grid. Candidates whose
/// response overflows get the clamped (large, finite) integral instead of an
/// exception, so the search can back away from unstable regions.
class SostiaeObjective {
public:
    /// Throws ImproperClosedLoop at construction when the plant has relative
    /// degree 0 and kd is free (set kd_free=false / pi_only to allow it).
    SostiaeObjective(TransferFunction plant, ResponseTrace target, bool kd_free = true);

    double operator()(const PidGains& g) const;

    const ResponseTrace& target() const { return target_; }

private:
    TransferFunction plant_;
    ResponseTrace target_;
};

/// Deterministic bound-constrained local minimization over the gain box:
/// Nelder-Mead with projection onto the box, restarted around the incumbent
/// with a growing simplex scale until no restart improves the objective.
/// Never evaluates outside the box; total evaluations <= max_evals.
OptimResult minimize(const std::function<double(const PidGains&)>& f,
                     const OptimOptions& opts);

}  // namespace sostiae
