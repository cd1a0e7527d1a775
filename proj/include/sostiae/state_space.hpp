#pragma once

#include <Eigen/Dense>

#include "sostiae/transfer_function.hpp"

namespace sostiae {

/// SISO state-space realization xdot = A x + B u, y = C x + D u.
/// D != 0 exactly when the source transfer function is biproper.
struct StateSpace {
    Eigen::MatrixXd A;  // n x n
    Eigen::VectorXd B;  // n x 1
    Eigen::RowVectorXd C;  // 1 x n
    double D = 0.0;

    int order() const { return static_cast<int>(A.rows()); }
};

/// Controllable canonical realization of a proper transfer function.
/// Biproper inputs are split as D + strictly proper remainder by one step of
/// polynomial division. A constant tf yields the order-0 realization (pure D).
StateSpace tf_to_ss(const TransferFunction& tf);

}  // namespace sostiae
