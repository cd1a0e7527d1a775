#include <doctest.h>

#include <cmath>

#include "sostiae/metrics.hpp"
#include "sostiae/target.hpp"

using namespace sostiae;

TEST_CASE("damping ratio from percent overshoot") {
    CHECK(damping_ratio(1.0) == doctest::Approx(0.82608).epsilon(1e-5));
    CHECK(damping_ratio(100.0 * std::exp(-M_PI)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(damping_ratio(99.0) == doctest::Approx(0.0031991).epsilon(1e-4));

    CHECK_THROWS_AS(damping_ratio(0.0), DomainError);
    CHECK_THROWS_AS(damping_ratio(-3.0), DomainError);
    CHECK_THROWS_AS(damping_ratio(100.0), DomainError);
    CHECK_THROWS_AS(damping_ratio(150.0), DomainError);
}

TEST_CASE("damping ratio is strictly decreasing in overshoot") {
    double sweep[] = {99.0, 50.0, 10.0, 4.32139, 1.0, 0.1};
    double prev = 0.0;
    for (double po : sweep) {
        double z = damping_ratio(po);
        CHECK(z > prev);
        CHECK(z < 1.0);
        prev = z;
    }
}

TEST_CASE("natural frequency") {
    CHECK(natural_frequency(0.82608, 2.5) == doctest::Approx(1.93685).epsilon(1e-5));
    CHECK(natural_frequency(1.0, 4.0) == doctest::Approx(1.0));
    CHECK(natural_frequency(0.5, 8.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(natural_frequency(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(natural_frequency(0.5, -1.0), DomainError);
}

TEST_CASE("second-order target construction") {
    auto grid = TimeGrid::default_for(2.5);
    auto model = make_target(SecondOrderSpec{2.5, 1.0}, grid);
    REQUIRE(model.tf.has_value());
    CHECK(model.tf->num()[0] == doctest::Approx(3.75139).epsilon(1e-5));
    CHECK(model.tf->den()[0] == 1.0);
    CHECK(model.tf->den()[1] == 8.0 / 2.5);
    CHECK(model.tf->den()[2] == doctest::Approx(3.75139).epsilon(1e-5));
    CHECK(model.trace.y.size() == static_cast<std::size_t>(grid.n_points));

    for (double ts : {0.5, 1.0, 2.5, 4.0, 5.0, 7.3}) {
        auto m = make_target(SecondOrderSpec{ts, 5.0}, TimeGrid::default_for(ts));
        CHECK(std::abs(m.tf->den()[1] * ts - 8.0) <= 8.0 * 1e-15);
    }
}

TEST_CASE("simulated target overshoot reproduces the requested PO") {
    for (double po : {1.0, 5.0, 10.0, 20.0}) {
        auto grid = TimeGrid::from_horizon(5.0 * 2.5, 0.001);
        auto model = make_target(SecondOrderSpec{2.5, po}, grid);
        double measured = percent_overshoot(model.trace, 1.0);
        CHECK(std::abs(measured - po) < 0.05);
    }
}

TEST_CASE("target settling time is near the requested value") {
    for (double po : {1.0, 5.0, 20.0}) {
        for (double ts : {2.5, 5.0}) {
            auto grid = TimeGrid::from_horizon(5.0 * ts, 0.001);
            auto model = make_target(SecondOrderSpec{ts, po}, grid);
            auto settled = settling_time(model.trace, 1.0);
            REQUIRE(settled.has_value());
            CHECK(*settled > 0.75 * ts);
            CHECK(*settled < 1.25 * ts);
        }
    }
}

TEST_CASE("trajectory targets") {
    auto grid = TimeGrid::default_for(2.5);
    auto direct = make_target(SecondOrderSpec{2.5, 1.0}, grid);

    std::vector<double> rt(grid.n_points), ry = direct.trace.y;
    for (int k = 0; k < grid.n_points; ++k) {
        rt[k] = grid.t(k);
    }
    auto via_traj = make_target_from_trajectory(TrajectorySpec{rt, ry}, grid);
    CHECK_FALSE(via_traj.tf.has_value());
    CHECK_FALSE(via_traj.zeta.has_value());
    for (int k = 0; k < grid.n_points; ++k) {
        CHECK(std::abs(via_traj.trace.y[k] - direct.trace.y[k]) < 1e-9);
    }

    auto ones = make_target_from_trajectory(
        TrajectorySpec{{0.0, grid.end()}, {1.0, 1.0}}, grid);
    for (double v : ones.trace.y) {
        CHECK(v == 1.0);
    }

    CHECK_THROWS_AS(make_target_from_trajectory(TrajectorySpec{{0.0, 5.0}, {0.0, 1.0}}, grid),
                    CoverageError);
}
