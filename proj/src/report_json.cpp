#include "sostiae/report_json.hpp"

#include <nlohmann/json.hpp>

namespace sostiae {

namespace {

using nlohmann::json;

json poly_json(const Polynomial& p) {
    return json(p.coeffs());
}

json grid_json(const TimeGrid& g) {
    return json{{"dt", g.dt}, {"n_points", g.n_points}};
}

json gains_json(const PidGains& g) {
    return json{{"kp", g.kp}, {"ki", g.ki}, {"kd", g.kd}};
}

json stability_json(const StabilityVerdict& v) {
    json poles = json::array();
    for (const auto& p : v.poles) {
        poles.push_back(json{{"re", p.real()}, {"im", p.imag()}});
    }
    return json{{"stable", v.stable}, {"marginal", v.marginal}, {"poles", poles}};
}

json metrics_json(const MetricsReport& m, std::optional<double> iae_vs_target) {
    json out{{"overshoot_pct", m.overshoot_pct},
             {"iae_unit_step", m.iae_unit_step},
             {"final_value", m.final_value}};
    out["settling_time"] = m.settling_time ? json(*m.settling_time) : json(nullptr);
    out["iae_vs_target"] = iae_vs_target ? json(*iae_vs_target) : json(nullptr);
    return out;
}

}  // namespace

json tune_report_json(const TuneReport& report, const std::string& trajectory_file) {
    json spec;
    if (const auto* so = std::get_if<SecondOrderSpec>(&report.spec)) {
        spec = json{{"ts", so->ts}, {"po", so->po}};
    } else {
        spec = json{{"trajectory_file", trajectory_file}};
    }
    return json{{"plant", {{"num", poly_json(report.plant.num())},
                           {"den", poly_json(report.plant.den())}}},
                {"spec", spec},
                {"grid", grid_json(report.grid)},
                {"gains", gains_json(report.gains)},
                {"metrics", metrics_json(report.metrics, report.iae_vs_target)},
                {"stability", stability_json(report.stability)},
                {"optimizer", {{"evals", report.optimizer.evals},
                               {"objective", report.optimizer.objective},
                               {"converged", report.optimizer.converged}}}};
}

json eval_report_json(const TransferFunction& plant, const PidGains& gains,
                      const TimeGrid& grid, const MetricsReport& metrics) {
    return json{{"plant", {{"num", poly_json(plant.num())},
                           {"den", poly_json(plant.den())}}},
                {"grid", grid_json(grid)},
                {"gains", gains_json(gains)},
                {"metrics", metrics_json(metrics, std::nullopt)},
                {"stability", stability_json(metrics.stability)}};
}

json bench_json(const std::vector<bench::BenchOutcome>& outcomes) {
    json rows = json::array();
    for (const auto& o : outcomes) {
        json row{{"name", o.name},
                 {"gains", gains_json(o.gains)},
                 {"stable", o.stable},
                 {"pass", o.pass}};
        auto field = [](const bench::FieldResult& f) {
            return json{{"measured", f.measured}, {"checked", f.checked}, {"pass", f.pass}};
        };
        row["ts"] = field(o.ts);
        row["po"] = field(o.po);
        row["iae"] = field(o.iae);
        if (o.ie.checked) {
            row["ie_identity"] = field(o.ie);
        }
        rows.push_back(row);
    }
    bool all = true;
    for (const auto& o : outcomes) {
        all = all && o.pass;
    }
    return json{{"cases", rows}, {"all_pass", all}};
}

}  // namespace sostiae
