#pragma once

#include <optional>

#include "sostiae/simulate.hpp"
#include "sostiae/stability.hpp"

namespace sostiae {

/// Standardized report for one gain triple on one plant.
/// settling_time is empty when the response never enters the band.
struct MetricsReport {
    std::optional<double> settling_time;
    double overshoot_pct = 0.0;
    double iae_unit_step = 0.0;
    double final_value = 0.0;
    StabilityVerdict stability;
};

/// Trapezoidal integral of |ref - y| on a shared grid. Throws GridMismatch.
double iae(const ResponseTrace& y, const ResponseTrace& ref);

/// Trapezoidal integral of |1 - y| (unit-step reference).
double iae_vs_unit(const ResponseTrace& y);

/// Smallest grid time after which the response stays inside
/// final_value +/- band*|final_value|; empty if it never does.
std::optional<double> settling_time(const ResponseTrace& y, double final_value,
                                    double band = 0.02);

/// max(0, (peak - final)/final * 100). Throws DomainError for final <= 0.
double percent_overshoot(const ResponseTrace& y, double final_value);

/// Close the loop with the given gains and fill a full MetricsReport.
/// The final value is the analytic DC gain, not the last sample.
MetricsReport evaluate_gains(const TransferFunction& plant, const PidGains& g,
                             const TimeGrid& grid);

}  // namespace sostiae
