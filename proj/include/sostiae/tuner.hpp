#pragma once

#include "sostiae/optimizer.hpp"

namespace sostiae {

/// Full outcome of one tuning run: target, gains, verification, diagnostics.
/// An unstable optimized loop is reported (`successful=false`), not thrown.
struct TuneReport {
    TransferFunction plant;
    TargetSpec spec;
    TimeGrid grid;
    TargetModel target;
    PidGains gains;
    double iae_vs_target = 0.0;
    MetricsReport metrics;  // vs unit step, on the tuning grid
    StabilityVerdict stability;
    OptimResult optimizer;
    bool successful = false;
};

/// Three-phase pipeline: derive the target, minimize the trace-matching IAE
/// over the non-negative gain box, then verify stability and report metrics.
/// The grid defaults to 0:0.01:5*ts for second-order specs and to the
/// trajectory span for trajectory specs.
TuneReport tune(const TransferFunction& plant, const TargetSpec& spec,
                const OptimOptions& opts = {},
                std::optional<TimeGrid> grid_override = std::nullopt);

}  // namespace sostiae
