#include "sostiae/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sostiae {

namespace {

double trapz_abs_error(const ResponseTrace& y, const double* ref, const ResponseTrace* ref_trace) {
    double dt = y.grid.dt;
    double sum = 0.0;
    double prev = 0.0;
    for (int k = 0; k < y.grid.n_points; ++k) {
        double r = ref_trace ? ref_trace->y[k] : *ref;
        double e = std::abs(r - y.y[k]);
        if (k > 0) {
            sum += 0.5 * dt * (prev + e);
        }
        prev = e;
    }
    return sum;
}

}  // namespace

double iae(const ResponseTrace& y, const ResponseTrace& ref) {
    if (!(y.grid == ref.grid)) {
        throw GridMismatch("IAE requires both traces on the same time grid");
    }
    return trapz_abs_error(y, nullptr, &ref);
}

double iae_vs_unit(const ResponseTrace& y) {
    double one = 1.0;
    return trapz_abs_error(y, &one, nullptr);
}

std::optional<double> settling_time(const ResponseTrace& y, double final_value, double band) {
    if (final_value == 0.0) {
        throw DomainError("settling time is undefined for a zero final value");
    }
    double tol = band * std::abs(final_value);
    // Last exit from the band, scanning from the end.
    int last_outside = -1;
    for (int k = y.grid.n_points - 1; k >= 0; --k) {
        if (std::abs(y.y[k] - final_value) > tol) {
            last_outside = k;
            break;
        }
    }
    if (last_outside < 0) {
        return 0.0;
    }
    if (last_outside == y.grid.n_points - 1) {
        return std::nullopt;  // never settles on this horizon
    }
    return y.grid.t(last_outside + 1);
}

double percent_overshoot(const ResponseTrace& y, double final_value) {
    if (!(final_value > 0.0)) {
        throw DomainError("percent overshoot needs a positive final value");
    }
    double peak = *std::max_element(y.y.begin(), y.y.end());
    return std::max(0.0, (peak - final_value) / final_value * 100.0);
}

MetricsReport evaluate_gains(const TransferFunction& plant, const PidGains& g,
                             const TimeGrid& grid) {
    TransferFunction closed = unity_feedback(series(pid_tf(g), plant));

    MetricsReport report;
    report.final_value = dc_gain(closed);
    if (!std::isfinite(report.final_value)) {
        throw DomainError("closed loop has no finite DC gain; metrics undefined");
    }
    ResponseTrace y = step_response(closed, grid);
    report.iae_unit_step = iae_vs_unit(y);
    report.stability = is_stable(closed);
    if (report.final_value > 0.0 && !y.overflow) {
        report.settling_time = settling_time(y, report.final_value);
        report.overshoot_pct = percent_overshoot(y, report.final_value);
    } else {
        // Divergent or sign-flipped loop: band/peak metrics are meaningless.
        report.settling_time = std::nullopt;
        report.overshoot_pct = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

}  // namespace sostiae
