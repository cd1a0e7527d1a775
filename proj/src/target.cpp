#include "sostiae/target.hpp"

#include <cmath>

namespace sostiae {

double damping_ratio(double po) {
    if (!(po > 0.0) || !(po < 100.0) || !std::isfinite(po)) {
        throw DomainError(
            "percent overshoot must lie strictly inside (0, 100); "
            "use po=0.01 as a near-zero-overshoot surrogate");
    }
    double l = std::log(po / 100.0);
    return -l / std::sqrt(M_PI * M_PI + l * l);
}

double natural_frequency(double zeta, double ts) {
    if (!(zeta > 0.0) || !(ts > 0.0)) {
        throw DomainError("damping ratio and settling time must be positive");
    }
    return 4.0 / (zeta * ts);
}

TargetModel make_target(const SecondOrderSpec& spec, const TimeGrid& grid) {
    if (!(spec.ts > 0.0) || !std::isfinite(spec.ts)) {
        throw DomainError("settling time must be finite and positive");
    }
    double zeta = damping_ratio(spec.po);
    double wn = natural_frequency(zeta, spec.ts);

    TargetModel model;
    model.zeta = zeta;
    model.wn = wn;
    // 2*zeta*wn == 8/ts algebraically; written as 8/ts to keep the identity exact.
    model.tf = TransferFunction(Polynomial{wn * wn},
                                Polynomial{1.0, 8.0 / spec.ts, wn * wn});
    model.trace = step_response(*model.tf, grid);
    return model;
}

TargetModel make_target_from_trajectory(const TrajectorySpec& spec, const TimeGrid& grid) {
    TargetModel model;
    model.trace = resample(spec.raw_t, spec.raw_y, grid);
    return model;
}

TargetModel make_target(const TargetSpec& spec, const TimeGrid& grid) {
    if (const auto* so = std::get_if<SecondOrderSpec>(&spec)) {
        return make_target(*so, grid);
    }
    return make_target_from_trajectory(std::get<TrajectorySpec>(spec), grid);
}

}  // namespace sostiae
