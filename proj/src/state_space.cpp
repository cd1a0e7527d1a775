#include "sostiae/state_space.hpp"

namespace sostiae {

StateSpace tf_to_ss(const TransferFunction& tf) {
    if (!tf.is_proper()) {
        throw DomainError("cannot realize an improper transfer function");
    }
    const auto& den = tf.den().coeffs();  // monic by construction
    int n = tf.den().degree();

    // Biproper part: num = D*den + remainder, remainder strictly proper.
    double D = 0.0;
    std::vector<double> rem = tf.num().coeffs();
    if (tf.num().degree() == n && n >= 0 && !tf.num().is_zero()) {
        D = rem.front();
        for (int i = 0; i <= n; ++i) {
            rem[i] -= D * den[i];
        }
    }
    Polynomial r(std::move(rem));

    StateSpace ss;
    ss.A = Eigen::MatrixXd::Zero(n, n);
    ss.B = Eigen::VectorXd::Zero(n);
    ss.C = Eigen::RowVectorXd::Zero(n);
    ss.D = D;
    if (n == 0) {
        return ss;
    }
    for (int i = 0; i + 1 < n; ++i) {
        ss.A(i, i + 1) = 1.0;
    }
    // Bottom row: -den constant..s^{n-1} coefficients.
    for (int i = 0; i < n; ++i) {
        ss.A(n - 1, i) = -den[n - i];  // den[n-i] is the s^i coefficient
    }
    ss.B(n - 1) = 1.0;
    // C holds the remainder coefficients in ascending powers.
    const auto& rc = r.coeffs();
    int rdeg = r.degree();
    if (!r.is_zero()) {
        for (int i = 0; i <= rdeg; ++i) {
            ss.C(rdeg - i) = rc[i];  // rc[i] is the s^{rdeg-i} coefficient
        }
    }
    return ss;
}

}  // namespace sostiae
