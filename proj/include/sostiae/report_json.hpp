#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "sostiae/bench.hpp"
#include "sostiae/tuner.hpp"

namespace sostiae {

/// Stable-key JSON view of a tuning run:
/// plant{num,den}, spec{ts,po | trajectory_file}, grid{dt,n_points},
/// gains{kp,ki,kd}, metrics{settling_time,overshoot_pct,iae_unit_step,
/// iae_vs_target,final_value}, stability{stable,marginal,poles:[{re,im}]},
/// optimizer{evals,objective,converged}.
nlohmann::json tune_report_json(const TuneReport& report,
                                const std::string& trajectory_file = "");

/// Same schema minus spec/optimizer for a fixed-gain evaluation.
nlohmann::json eval_report_json(const TransferFunction& plant, const PidGains& gains,
                                const TimeGrid& grid, const MetricsReport& metrics);

nlohmann::json bench_json(const std::vector<bench::BenchOutcome>& outcomes);

}  // namespace sostiae
