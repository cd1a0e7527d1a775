#pragma once

#include <optional>
#include <variant>

#include "sostiae/simulate.hpp"

namespace sostiae {

/// Target given as (settling time, percent overshoot).
struct SecondOrderSpec {
    double ts = 0.0;  // seconds, > 0
    double po = 0.0;  // percent, inside (0, 100)
};

/// Target given directly as a sampled trajectory.
struct TrajectorySpec {
    std::vector<double> raw_t;
    std::vector<double> raw_y;
};

using TargetSpec = std::variant<SecondOrderSpec, TrajectorySpec>;

/// The reference the optimizer matches. For trajectory specs only the trace
/// is populated; downstream stages never need more than the trace.
struct TargetModel {
    std::optional<double> zeta;
    std::optional<double> wn;
    std::optional<TransferFunction> tf;
    ResponseTrace trace;
};

/// Damping ratio from percent overshoot: -ln(PO/100)/sqrt(pi^2 + ln^2(PO/100)).
/// Strictly decreasing on (0,100) with range (0,1).
double damping_ratio(double po);

/// Natural frequency for a 2% settling band: 4/(zeta*ts).
double natural_frequency(double zeta, double ts);

/// wn^2/(s^2 + 2 zeta wn s + wn^2), with the middle denominator coefficient
/// computed as 8/ts so the algebraic identity den[1]*ts = 8 holds exactly.
TargetModel make_target(const SecondOrderSpec& spec, const TimeGrid& grid);

TargetModel make_target_from_trajectory(const TrajectorySpec& spec, const TimeGrid& grid);

TargetModel make_target(const TargetSpec& spec, const TimeGrid& grid);

}  // namespace sostiae
