#include "sostiae/stability.hpp"

#include <Eigen/Eigenvalues>
#include <limits>

namespace sostiae {

std::vector<std::complex<double>> roots(const Polynomial& p) {
    int n = p.degree();
    if (n < 1) {
        throw DegreeZero("root finding needs degree >= 1");
    }
    const auto& c = p.coeffs();
    double lead = p.leading();

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        companion(0, i) = -c[i + 1] / lead;
    }
    for (int i = 1; i < n; ++i) {
        companion(i, i - 1) = 1.0;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = solver.eigenvalues()[i];
    }
    return out;
}

StabilityVerdict is_stable(const TransferFunction& tf) {
    StabilityVerdict v;
    if (tf.den().degree() == 0) {
        v.stable = true;
        v.max_real_part = -std::numeric_limits<double>::infinity();
        return v;
    }
    v.poles = roots(tf.den());
    v.max_real_part = -std::numeric_limits<double>::infinity();
    for (const auto& p : v.poles) {
        v.max_real_part = std::max(v.max_real_part, p.real());
    }
    v.stable = v.max_real_part < 0.0;
    v.marginal = std::abs(v.max_real_part) < kMarginalTol;
    return v;
}

}  // namespace sostiae
