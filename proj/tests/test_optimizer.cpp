#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sostiae/optimizer.hpp"

using namespace sostiae;

namespace {

TransferFunction gn(int n) {
    Polynomial den{1.0};
    for (int i = 0; i < n; ++i) {
        den = den * Polynomial{1.0, 1.0};
    }
    return {Polynomial{1.0}, den};
}

double quadratic(const PidGains& g) {
    return (g.kp - 1.0) * (g.kp - 1.0) + (g.ki - 2.0) * (g.ki - 2.0) + g.kd * g.kd;
}

}  // namespace

TEST_CASE("convex quadratic lands on the interior minimum") {
    OptimOptions opts;
    auto r = minimize(quadratic, opts);
    CHECK(std::abs(r.gains.kp - 1.0) < 1e-4);
    CHECK(std::abs(r.gains.ki - 2.0) < 1e-4);
    CHECK(std::abs(r.gains.kd - 0.0) < 1e-4);
    CHECK(r.converged);
    CHECK(r.evals <= opts.max_evals);
}

TEST_CASE("bound-constrained minimum sticks to the active bound") {
    OptimOptions opts;
    auto r = minimize([](const PidGains& g) { return (g.kp + 1.0) * (g.kp + 1.0); }, opts);
    CHECK(r.gains.kp == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(r.gains.kp >= 0.0);
}

TEST_CASE("feasibility, descent and budget invariants") {
    OptimOptions opts;
    opts.max_evals = 60;
    opts.upper = {0.4, 0.4, 0.2};
    auto r = minimize(quadratic, opts);
    CHECK(r.evals <= 60);
    CHECK(r.gains.kp >= 0.0);
    CHECK(r.gains.kp <= 0.4);
    CHECK(r.gains.ki <= 0.4);
    CHECK(r.gains.kd <= 0.2);
    CHECK(r.objective <= quadratic(opts.x0));
}

TEST_CASE("pi_only pins kd to exactly zero") {
    OptimOptions opts;
    opts.pi_only = true;
    auto r = minimize(quadratic, opts);
    CHECK(r.gains.kd == 0.0);
    CHECK(std::abs(r.gains.kp - 1.0) < 1e-4);
    CHECK(std::abs(r.gains.ki - 2.0) < 1e-4);
}

TEST_CASE("two identical runs are bit-identical") {
    auto grid = TimeGrid::default_for(2.5);
    auto target = make_target(SecondOrderSpec{2.5, 1.0}, grid);
    SostiaeObjective obj(gn(2), target.trace);
    OptimOptions opts;
    opts.max_evals = 400;
    auto a = minimize([&](const PidGains& g) { return obj(g); }, opts);
    auto b = minimize([&](const PidGains& g) { return obj(g); }, opts);
    CHECK(a.gains.kp == b.gains.kp);
    CHECK(a.gains.ki == b.gains.ki);
    CHECK(a.gains.kd == b.gains.kd);
    CHECK(a.objective == b.objective);
    CHECK(a.evals == b.evals);
}

TEST_CASE("objective at the zero start equals the target area") {
    auto grid = TimeGrid::default_for(2.5);
    auto target = make_target(SecondOrderSpec{2.5, 1.0}, grid);
    SostiaeObjective obj(gn(1), target.trace);
    double area = 0.0;
    for (int k = 0; k + 1 < grid.n_points; ++k) {
        area += 0.5 * grid.dt * (std::abs(target.trace.y[k]) + std::abs(target.trace.y[k + 1]));
    }
    CHECK(obj({0.0, 0.0, 0.0}) == doctest::Approx(area).epsilon(1e-12));
}

TEST_CASE("objective refuses a free derivative on a relative-degree-0 plant") {
    TransferFunction biproper(Polynomial{1.0, 2.0}, Polynomial{1.0, 1.0});
    auto grid = TimeGrid::default_for(2.5);
    auto target = make_target(SecondOrderSpec{2.5, 1.0}, grid);
    CHECK_THROWS_AS(SostiaeObjective(biproper, target.trace), ImproperClosedLoop);
    CHECK_NOTHROW(SostiaeObjective(biproper, target.trace, /*kd_free=*/false));
}

TEST_CASE("matches a brute-force PI grid oracle on the first-order plant") {
    auto grid = TimeGrid::default_for(2.5);
    auto target = make_target(SecondOrderSpec{2.5, 1.0}, grid);
    SostiaeObjective obj(gn(1), target.trace, /*kd_free=*/false);

    OptimOptions opts;
    opts.pi_only = true;
    auto r = minimize([&](const PidGains& g) { return obj(g); }, opts);

    // Coarse oracle here (step 0.05); the acceptance suite runs the full 0.01 sweep.
    auto oracle = oracles::grid_search_pi(
        [&](double kp, double ki) { return obj({kp, ki, 0.0}); }, 5.0, 0.05);
    CHECK(r.objective <= oracle.objective * 1.02);
}
