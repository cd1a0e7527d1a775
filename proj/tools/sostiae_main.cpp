// Command-line frontend: tune, eval, bench, plot.
// Exit codes: 0 success, 2 invalid input, 3 result unstable,
// 4 optimizer did not converge and no stable result.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sostiae/bench.hpp"
#include "sostiae/report_json.hpp"
#include "sostiae/tuner.hpp"

namespace {

using namespace sostiae;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitUnstable = 3;
constexpr int kExitNoResult = 4;

Polynomial parse_poly(const std::string& text) {
    std::vector<double> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) {
            ++pos;
        }
        if (pos != item.size()) {
            throw DomainError("bad coefficient '" + item + "'");
        }
        coeffs.push_back(v);
    }
    if (coeffs.empty()) {
        throw DomainError("empty coefficient list");
    }
    return Polynomial(coeffs);
}

// Coefficients may arrive as separate argv tokens ("--den 1 1") or one
// comma-separated token ("--den 1,1"); both feed the same parser.
Polynomial parse_poly(const std::vector<std::string>& tokens) {
    std::string joined;
    for (const auto& tok : tokens) {
        if (!joined.empty()) {
            joined += ',';
        }
        joined += tok;
    }
    return parse_poly(joined);
}

struct TrajectoryFile {
    std::vector<double> t;
    std::vector<double> y;
};

// CSV with columns t,y; an optional header line is skipped.
TrajectoryFile read_trajectory(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open trajectory file '" + path + "'");
    }
    TrajectoryFile traj;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',')) {
            throw DomainError("trajectory file needs two comma-separated columns");
        }
        try {
            traj.t.push_back(std::stod(a));
            traj.y.push_back(std::stod(b));
        } catch (const std::exception&) {
            if (first) {  // header row
                first = false;
                continue;
            }
            throw DomainError("bad numeric row in trajectory file: '" + line + "'");
        }
        first = false;
    }
    if (traj.t.size() < 2) {
        throw DomainError("trajectory file needs at least two samples");
    }
    return traj;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write '" + path + "'");
    }
    out << content;
}

std::string format_csv(const TimeGrid& grid, const std::vector<double>& target,
                       const std::vector<double>& pid) {
    std::ostringstream os;
    os << "t,y_target,y_pid\n";
    char buf[96];
    for (int k = 0; k < grid.n_points; ++k) {
        std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g\n", grid.t(k), target[k], pid[k]);
        os << buf;
    }
    return os.str();
}

struct Series {
    std::string name;
    std::string color;
    std::vector<double> y;
};

std::string format_svg(const std::vector<double>& t, const std::vector<Series>& series) {
    const double w = 720, h = 440, ml = 60, mr = 20, mt = 20, mb = 45;
    double ymin = 0.0, ymax = 0.0;
    for (const auto& s : series) {
        for (double v : s.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (ymax - ymin < 1e-12) {
        ymax = ymin + 1.0;
    }
    double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    double tmax = t.empty() ? 1.0 : t.back();

    auto px = [&](double x) { return ml + x / tmax * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Axes with ticks.
    char buf[256];
    for (int i = 0; i <= 5; ++i) {
        double xv = tmax * i / 5.0;
        double yv = ymin + (ymax - ymin) * i / 5.0;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"#ddd\"/>\n",
                      px(xv), py(ymin), px(xv), py(ymax));
        os << buf;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"#ddd\"/>\n",
                      px(0), py(yv), px(tmax), py(yv));
        os << buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"middle\">"
                      "%.2f</text>\n",
                      px(xv), h - mb + 16, xv);
        os << buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"end\">"
                      "%.2f</text>\n",
                      ml - 6, py(yv) + 4, yv);
        os << buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                  "stroke=\"black\"/>\n",
                  ml, mt, w - ml - mr, h - mt - mb);
    os << buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"middle\">"
                  "t [s]</text>\n",
                  (ml + w - mr) / 2, h - 8);
    os << buf;

    int legend = 0;
    for (const auto& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < t.size(); ++k) {
            std::snprintf(buf, sizeof(buf), "%.1f,%.1f ", px(t[k]), py(s.y[k]));
            os << buf;
        }
        os << "\"/>\n";
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" fill=\"%s\">%s</text>\n",
                      ml + 12.0, mt + 18.0 + 16.0 * legend, s.color.c_str(), s.name.c_str());
        os << buf;
        ++legend;
    }
    os << "</svg>\n";
    return os.str();
}

void print_metrics(const MetricsReport& m) {
    std::printf("T_s      = ");
    if (m.settling_time) {
        std::printf("%.4f s\n", *m.settling_time);
    } else {
        std::printf("did not settle on this horizon\n");
    }
    std::printf("PO       = %.4f %%\n", m.overshoot_pct);
    std::printf("IAE      = %.4f\n", m.iae_unit_step);
    std::printf("final    = %.4f\n", m.final_value);
    std::printf("stable   = %s%s\n", m.stability.stable ? "yes" : "no",
                m.stability.marginal ? " (marginal)" : "");
}

struct CommonOutputs {
    std::string csv_path;
    std::string svg_path;
    std::string out_path;
};

void emit_outputs(const CommonOutputs& io, const TimeGrid& grid,
                  const std::vector<double>& target, const std::vector<double>& pid,
                  const nlohmann::json& report) {
    if (!io.csv_path.empty() || !io.svg_path.empty()) {
        std::string csv = format_csv(grid, target, pid);
        if (!io.csv_path.empty()) {
            write_text(io.csv_path, csv);
        }
        if (!io.svg_path.empty()) {
            std::vector<double> t(grid.n_points);
            for (int k = 0; k < grid.n_points; ++k) {
                t[k] = grid.t(k);
            }
            write_text(io.svg_path, format_svg(t, {{"y_target", "#888888", target},
                                                   {"y_pid", "#1f77b4", pid}}));
        }
    }
    if (!io.out_path.empty()) {
        write_text(io.out_path, report.dump(2) + "\n");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"SOSTIAE PID tuner: match a closed loop to a second-order target by IAE"};
    app.require_subcommand(1);

    // ---- tune ----
    auto* tune_cmd = app.add_subcommand("tune", "optimize PID gains for a plant");
    std::vector<std::string> num_s, den_s;
    std::string traj_path;
    double ts = 0.0, po = 0.0, dt = 0.01, horizon_mult = 5.0;
    bool pi_only = false;
    int budget = 3000;
    double kp_max = std::numeric_limits<double>::infinity();
    double ki_max = std::numeric_limits<double>::infinity();
    double kd_max = std::numeric_limits<double>::infinity();
    CommonOutputs tune_io;
    tune_cmd->add_option("--num", num_s, "plant numerator, descending coefficients")->required();
    tune_cmd->add_option("--den", den_s, "plant denominator, descending coefficients")->required();
    auto* ts_opt = tune_cmd->add_option("--ts", ts, "target settling time [s]");
    auto* po_opt = tune_cmd->add_option("--po", po, "target percent overshoot (0,100)");
    auto* traj_opt = tune_cmd->add_option("--trajectory", traj_path, "target trajectory CSV (t,y)");
    ts_opt->needs(po_opt);
    po_opt->needs(ts_opt);
    traj_opt->excludes(ts_opt);
    tune_cmd->add_option("--dt", dt, "grid step [s]")->capture_default_str();
    tune_cmd->add_option("--horizon-mult", horizon_mult, "grid span as a multiple of ts")
        ->capture_default_str();
    tune_cmd->add_flag("--pi-only", pi_only, "pin kd to 0");
    tune_cmd->add_option("--budget", budget, "objective evaluation budget")->capture_default_str();
    tune_cmd->add_option("--kp-max", kp_max, "upper bound on kp");
    tune_cmd->add_option("--ki-max", ki_max, "upper bound on ki");
    tune_cmd->add_option("--kd-max", kd_max, "upper bound on kd");
    tune_cmd->add_option("--csv", tune_io.csv_path, "write the traces as CSV");
    tune_cmd->add_option("--svg", tune_io.svg_path, "write a step-response plot");
    tune_cmd->add_option("--out", tune_io.out_path, "write the JSON report");

    // ---- eval ----
    auto* eval_cmd = app.add_subcommand("eval", "evaluate fixed gains on a plant");
    std::vector<std::string> e_num, e_den;
    double kp = 0.0, ki = 0.0, kd = 0.0, e_dt = 0.01, e_horizon = 12.5;
    CommonOutputs eval_io;
    eval_cmd->add_option("--num", e_num)->required();
    eval_cmd->add_option("--den", e_den)->required();
    eval_cmd->add_option("--kp", kp)->required();
    eval_cmd->add_option("--ki", ki)->required();
    eval_cmd->add_option("--kd", kd)->required();
    eval_cmd->add_option("--dt", e_dt)->capture_default_str();
    eval_cmd->add_option("--horizon", e_horizon, "grid span [s]")->capture_default_str();
    eval_cmd->add_option("--csv", eval_io.csv_path);
    eval_cmd->add_option("--svg", eval_io.svg_path);
    eval_cmd->add_option("--out", eval_io.out_path);

    // ---- bench ----
    auto* bench_cmd = app.add_subcommand("bench", "run the reproduction harness");
    std::string suite;
    std::string bench_json_path;
    bench_cmd->add_option("suite", suite, "table1 or astrom")
        ->required()
        ->check(CLI::IsMember({"table1", "astrom"}));
    bench_cmd->add_option("--json", bench_json_path, "write machine-readable results");

    // ---- plot ----
    auto* plot_cmd = app.add_subcommand("plot", "render a trace CSV as SVG");
    std::string plot_csv, plot_svg;
    plot_cmd->add_option("--csv", plot_csv, "input trace CSV")->required();
    plot_cmd->add_option("--svg", plot_svg, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (*tune_cmd) {
            TransferFunction plant(parse_poly(num_s), parse_poly(den_s));
            TargetSpec spec;
            std::optional<TimeGrid> grid;
            if (!traj_path.empty()) {
                TrajectoryFile traj = read_trajectory(traj_path);
                grid = TimeGrid::from_horizon(traj.t.back(), dt);
                spec = TrajectorySpec{std::move(traj.t), std::move(traj.y)};
            } else if (ts_opt->count() > 0) {
                spec = SecondOrderSpec{ts, po};
                grid = TimeGrid::from_horizon(horizon_mult * ts, dt);
            } else {
                std::cerr << "error: give either --ts/--po or --trajectory\n";
                return kExitInvalid;
            }
            OptimOptions opts;
            opts.max_evals = budget;
            opts.pi_only = pi_only;
            opts.upper = {kp_max, ki_max, kd_max};

            TuneReport report = tune(plant, spec, opts, grid);

            std::printf("gains    : kp=%.4f ki=%.4f kd=%.4f\n", report.gains.kp,
                        report.gains.ki, report.gains.kd);
            std::printf("IAE(tgt) = %.4f  (evals=%d, converged=%s)\n", report.iae_vs_target,
                        report.optimizer.evals, report.optimizer.converged ? "yes" : "no");
            print_metrics(report.metrics);

            ResponseTrace y = step_response(
                unity_feedback(series(pid_tf(report.gains), plant)), report.grid);
            emit_outputs(tune_io, report.grid, report.target.trace.y, y.y,
                         tune_report_json(report, traj_path));
            if (!report.successful) {
                return report.optimizer.converged ? kExitUnstable : kExitNoResult;
            }
            return kExitOk;
        }

        if (*eval_cmd) {
            TransferFunction plant(parse_poly(e_num), parse_poly(e_den));
            PidGains gains{kp, ki, kd};
            validate(gains);
            TimeGrid grid = TimeGrid::from_horizon(e_horizon, e_dt);
            MetricsReport m = evaluate_gains(plant, gains, grid);
            print_metrics(m);
            ResponseTrace y = step_response(unity_feedback(series(pid_tf(gains), plant)), grid);
            std::vector<double> unit(grid.n_points, 1.0);
            emit_outputs(eval_io, grid, unit, y.y, eval_report_json(plant, gains, grid, m));
            return kExitOk;
        }

        if (*bench_cmd) {
            auto outcomes = suite == "table1" ? bench::run_table1() : bench::run_astrom_g3();
            std::cout << bench::format_table(outcomes);
            if (!bench_json_path.empty()) {
                write_text(bench_json_path, bench_json(outcomes).dump(2) + "\n");
            }
            return kExitOk;
        }

        if (*plot_cmd) {
            std::ifstream in(plot_csv);
            if (!in) {
                throw DomainError("cannot open '" + plot_csv + "'");
            }
            std::vector<double> t, y_target, y_pid;
            std::string line;
            bool first = true;
            while (std::getline(in, line)) {
                if (line.empty()) {
                    continue;
                }
                std::stringstream ss(line);
                std::string a, b, c;
                std::getline(ss, a, ',');
                std::getline(ss, b, ',');
                std::getline(ss, c, ',');
                try {
                    double tv = std::stod(a), yt = std::stod(b), yp = std::stod(c);
                    t.push_back(tv);
                    y_target.push_back(yt);
                    y_pid.push_back(yp);
                } catch (const std::exception&) {
                    if (first) {
                        first = false;
                        continue;
                    }
                    throw DomainError("bad row in trace CSV: '" + line + "'");
                }
                first = false;
            }
            if (t.empty()) {
                throw DomainError("trace CSV has no data rows");
            }
            write_text(plot_svg, format_svg(t, {{"y_target", "#888888", y_target},
                                                {"y_pid", "#1f77b4", y_pid}}));
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
