#include "sostiae/tuner.hpp"

namespace sostiae {

namespace {

TimeGrid default_grid(const TargetSpec& spec) {
    if (const auto* so = std::get_if<SecondOrderSpec>(&spec)) {
        if (!(so->ts > 0.0)) {
            throw DomainError("settling time must be positive");
        }
        return TimeGrid::default_for(so->ts);
    }
    const auto& traj = std::get<TrajectorySpec>(spec);
    if (traj.raw_t.empty()) {
        throw DomainError("trajectory spec has no samples");
    }
    return TimeGrid::from_horizon(traj.raw_t.back(), 0.01);
}

}  // namespace

TuneReport tune(const TransferFunction& plant, const TargetSpec& spec,
                const OptimOptions& opts, std::optional<TimeGrid> grid_override) {
    TimeGrid grid = grid_override.value_or(default_grid(spec));

    TargetModel target = make_target(spec, grid);
    SostiaeObjective objective(plant, target.trace, /*kd_free=*/!opts.pi_only);

    OptimResult opt = minimize([&](const PidGains& g) { return objective(g); }, opts);

    TuneReport report{.plant = plant,
                      .spec = spec,
                      .grid = grid,
                      .target = std::move(target),
                      .gains = opt.gains,
                      .iae_vs_target = opt.objective,
                      .metrics = evaluate_gains(plant, opt.gains, grid),
                      .stability = {},
                      .optimizer = std::move(opt),
                      .successful = false};
    report.stability = report.metrics.stability;
    report.successful = report.stability.stable;
    return report;
}

}  // namespace sostiae
