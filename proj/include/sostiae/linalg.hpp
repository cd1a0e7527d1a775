#pragma once

#include <Eigen/Dense>

namespace sostiae {

/// Matrix exponential by scaling and squaring with Pade approximants
/// (Higham 2005 coefficients and 1-norm thresholds).
Eigen::MatrixXd expm(const Eigen::MatrixXd& A);

}  // namespace sostiae
