#include "oracles.hpp"

#include <cmath>
#include <vector>

namespace oracles {

std::optional<bool> routh_hurwitz_stable(const sostiae::Polynomial& p) {
    const auto& c = p.coeffs();
    int n = p.degree();
    if (n < 1) {
        return true;
    }
    double scale = 0.0;
    for (double v : c) {
        scale = std::max(scale, std::abs(v));
    }
    const double eps = 1e-9 * scale;

    // Rows of the Routh array, seeded from alternating coefficients.
    std::vector<std::vector<double>> rows(2);
    for (int i = 0; i <= n; i += 2) {
        rows[0].push_back(c[i]);
    }
    for (int i = 1; i <= n; i += 2) {
        rows[1].push_back(c[i]);
    }
    if (rows[1].empty()) {
        rows[1].push_back(0.0);
    }

    std::vector<double> first_col{rows[0][0], rows[1][0]};
    for (int r = 2; r <= n; ++r) {
        const auto& a = rows[r - 2];
        const auto& b = rows[r - 1];
        double pivot = b[0];
        if (std::abs(pivot) < eps) {
            return std::nullopt;  // zero (or near-zero) pivot: marginal case
        }
        // next[j] = (b[0]*a[j+1] - a[0]*b[j+1]) / b[0]
        std::vector<double> next;
        for (std::size_t j = 0; j + 1 <= a.size(); ++j) {
            double a1 = j + 1 < a.size() ? a[j + 1] : 0.0;
            double b1 = j + 1 < b.size() ? b[j + 1] : 0.0;
            next.push_back((pivot * a1 - a[0] * b1) / pivot);
        }
        if (next.empty()) {
            next.push_back(0.0);
        }
        rows.push_back(next);
        first_col.push_back(next[0]);
    }
    for (double v : first_col) {
        if (std::abs(v) < eps) {
            return std::nullopt;
        }
    }
    bool positive = first_col[0] > 0.0;
    for (double v : first_col) {
        if ((v > 0.0) != positive) {
            return false;
        }
    }
    return true;
}

std::vector<double> rk45_step_response(const sostiae::StateSpace& ss,
                                       const sostiae::TimeGrid& grid) {
    using Vec = Eigen::VectorXd;
    const int n = ss.order();
    std::vector<double> out(grid.n_points);
    if (n == 0) {
        for (int k = 0; k < grid.n_points; ++k) {
            out[k] = ss.D;
        }
        return out;
    }

    auto deriv = [&](const Vec& x) -> Vec { return ss.A * x + ss.B; };

    // Dormand-Prince 5(4) coefficients.
    const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    const double a21 = 1.0 / 5;
    const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
    const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
    const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    (void)c2;
    (void)c3;
    (void)c4;
    (void)c5;

    const double tol = 1e-10;
    Vec x = Vec::Zero(n);
    double t = 0.0;
    out[0] = ss.C.dot(x) + ss.D;

    for (int k = 1; k < grid.n_points; ++k) {
        double t_end = grid.t(k);
        double h = std::min(1e-3, t_end - t);
        while (t < t_end - 1e-14) {
            h = std::min(h, t_end - t);
            Vec k1 = deriv(x);
            Vec k2 = deriv(x + h * a21 * k1);
            Vec k3 = deriv(x + h * (a31 * k1 + a32 * k2));
            Vec k4 = deriv(x + h * (a41 * k1 + a42 * k2 + a43 * k3));
            Vec k5 = deriv(x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            Vec k6 = deriv(x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            Vec x5 = x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            Vec k7 = deriv(x5);
            Vec err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
            double sc = tol * (1.0 + x.cwiseAbs().maxCoeff());
            double enorm = err.cwiseAbs().maxCoeff() / sc;
            if (enorm <= 1.0) {
                t += h;
                x = x5;
            }
            double factor = enorm > 0.0 ? 0.9 * std::pow(enorm, -0.2) : 5.0;
            h *= std::clamp(factor, 0.2, 5.0);
            h = std::max(h, 1e-12);
        }
        t = t_end;
        out[k] = ss.C.dot(x) + ss.D;
    }
    return out;
}

GridSearchResult grid_search_pi(const std::function<double(double, double)>& f,
                                double kmax, double step) {
    GridSearchResult best;
    bool first = true;
    int steps = static_cast<int>(std::lround(kmax / step));
    for (int i = 0; i <= steps; ++i) {
        double kp = i * step;
        for (int j = 0; j <= steps; ++j) {
            double ki = j * step;
            double v = f(kp, ki);
            if (first || v < best.objective) {
                best = {kp, ki, v};
                first = false;
            }
        }
    }
    return best;
}

}  // namespace oracles
