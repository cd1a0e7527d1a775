#include "sostiae/optimizer.hpp"

#include <algorithm>
#include <cmath>

namespace sostiae {

SostiaeObjective::SostiaeObjective(TransferFunction plant, ResponseTrace target, bool kd_free)
    : plant_(std::move(plant)), target_(std::move(target)) {
    if (!plant_.is_proper()) {
        throw DomainError("plant must be proper");
    }
    if (plant_.relative_degree() == 0 && kd_free) {
        throw ImproperClosedLoop(
            "relative-degree-0 plant with a free derivative gain; set pi_only");
    }
}

double SostiaeObjective::operator()(const PidGains& g) const {
    TransferFunction closed = unity_feedback(series(pid_tf(g), plant_));
    ResponseTrace y = step_response(closed, target_.grid);
    // Overflowed traces are clamped to +/-1e6 by the simulator, which turns
    // unstable candidates into large finite objective values.
    return iae(y, target_);
}

namespace {

using Vec = std::vector<double>;

struct BoxProblem {
    std::vector<int> active;        // coordinate indices that actually vary
    std::array<double, 3> base{};   // values of all three coordinates
    std::array<double, 3> lower{};
    std::array<double, 3> upper{};

    PidGains to_gains(const Vec& x) const {
        std::array<double, 3> full = base;
        for (std::size_t j = 0; j < active.size(); ++j) {
            full[active[j]] = x[j];
        }
        return {full[0], full[1], full[2]};
    }

    void project(Vec& x) const {
        for (std::size_t j = 0; j < active.size(); ++j) {
            int i = active[j];
            x[j] = std::clamp(x[j], lower[i], upper[i]);
        }
    }
};

}  // namespace

OptimResult minimize(const std::function<double(const PidGains&)>& f,
                     const OptimOptions& opts) {
    if (opts.max_evals < 1) {
        throw DomainError("evaluation budget must be at least 1");
    }
    std::array<double, 3> x0{opts.x0.kp, opts.x0.ki, opts.x0.kd};
    for (int i = 0; i < 3; ++i) {
        if (!(opts.lower[i] <= opts.upper[i])) {
            throw DomainError("optimizer bounds must satisfy lower <= upper");
        }
        if (x0[i] < opts.lower[i] || x0[i] > opts.upper[i]) {
            throw DomainError("starting point must lie inside the bound box");
        }
    }

    BoxProblem prob;
    prob.base = x0;
    prob.lower = opts.lower;
    prob.upper = opts.upper;
    if (opts.pi_only) {
        prob.base[2] = 0.0;
    }
    for (int i = 0; i < 3; ++i) {
        bool fixed = (opts.pi_only && i == 2) || opts.lower[i] == opts.upper[i];
        if (!fixed) {
            prob.active.push_back(i);
        }
    }
    const int d = static_cast<int>(prob.active.size());

    OptimResult result;
    int evals = 0;
    bool budget_hit = false;

    Vec best(d);
    for (int j = 0; j < d; ++j) {
        best[j] = x0[prob.active[j]];
    }
    prob.project(best);
    double fbest = 0.0;

    auto eval = [&](const Vec& x) {
        ++evals;
        double v = f(prob.to_gains(x));
        if (evals == 1 || v < fbest) {
            fbest = v;
            best = x;
            result.trace.emplace_back(evals, v);
        }
        return v;
    };

    eval(best);
    if (d == 0 || opts.max_evals < 2) {
        result.gains = prob.to_gains(best);
        result.objective = fbest;
        result.evals = evals;
        result.converged = (d == 0);
        return result;
    }

    auto out_of_budget = [&] { return evals >= opts.max_evals; };

    // One Nelder-Mead descent from a simplex spanned around `start`.
    auto nelder_mead_round = [&](const Vec& start, double scale) {
        std::vector<Vec> pts(d + 1, start);
        std::vector<double> fs(d + 1);
        for (int j = 0; j < d; ++j) {
            Vec& v = pts[j + 1];
            double orig = v[j];
            v[j] = orig + scale;
            prob.project(v);
            if (v[j] == orig) {
                v[j] = orig - scale;  // upper bound active; span inward instead
                prob.project(v);
            }
        }
        fs[0] = eval(pts[0]);
        for (int j = 1; j <= d && !out_of_budget(); ++j) {
            fs[j] = eval(pts[j]);
        }
        if (out_of_budget()) {
            return;
        }

        std::vector<int> order(d + 1);
        for (int j = 0; j <= d; ++j) {
            order[j] = j;
        }
        auto sort_order = [&] {
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return fs[a] < fs[b]; });
        };

        const int max_iters = 250 * d;
        for (int iter = 0; iter < max_iters && !out_of_budget(); ++iter) {
            sort_order();
            int lo = order[0], hi = order[d];

            double spread = fs[hi] - fs[lo];
            double diam = 0.0;
            for (int j = 1; j <= d; ++j) {
                for (int c = 0; c < d; ++c) {
                    diam = std::max(diam, std::abs(pts[order[j]][c] - pts[lo][c]));
                }
            }
            if (spread < opts.f_tol && diam < opts.x_tol) {
                return;
            }

            Vec centroid(d, 0.0);
            for (int j = 0; j < d; ++j) {
                for (int c = 0; c < d; ++c) {
                    centroid[c] += pts[order[j]][c] / d;
                }
            }

            auto along = [&](double coef) {
                Vec x(d);
                for (int c = 0; c < d; ++c) {
                    x[c] = centroid[c] + coef * (pts[hi][c] - centroid[c]);
                }
                prob.project(x);
                return x;
            };

            Vec xr = along(-1.0);
            double fr = eval(xr);
            if (fr < fs[lo]) {
                if (out_of_budget()) return;
                Vec xe = along(-2.0);
                double fe = eval(xe);
                if (fe < fr) {
                    pts[hi] = xe;
                    fs[hi] = fe;
                } else {
                    pts[hi] = xr;
                    fs[hi] = fr;
                }
                continue;
            }
            if (fr < fs[order[d - 1]]) {
                pts[hi] = xr;
                fs[hi] = fr;
                continue;
            }
            if (out_of_budget()) return;
            bool outside = fr < fs[hi];
            Vec xc = along(outside ? -0.5 : 0.5);
            double fc = eval(xc);
            if (fc < std::min(fr, fs[hi])) {
                pts[hi] = xc;
                fs[hi] = fc;
                continue;
            }
            // Shrink toward the best vertex.
            for (int j = 1; j <= d; ++j) {
                int idx = order[j];
                for (int c = 0; c < d; ++c) {
                    pts[idx][c] = pts[lo][c] + 0.5 * (pts[idx][c] - pts[lo][c]);
                }
                prob.project(pts[idx]);
                if (out_of_budget()) return;
                fs[idx] = eval(pts[idx]);
            }
        }
    };

    // Restart ladder: descend, then re-span around the incumbent with a larger
    // simplex until a full sweep of scales brings no further improvement.
    double scale = 0.1;
    while (!out_of_budget() && evals + d + 1 <= opts.max_evals) {
        double f_before = fbest;
        nelder_mead_round(best, scale);
        if (fbest < f_before - opts.f_tol) {
            scale = 1.0;
        } else {
            if (scale >= 4.0) {
                result.converged = true;
                break;
            }
            scale *= 2.0;
        }
    }
    budget_hit = out_of_budget();
    if (budget_hit) {
        result.converged = false;
    }

    result.gains = prob.to_gains(best);
    result.objective = fbest;
    result.evals = evals;
    return result;
}

}  // namespace sostiae
