#include "sostiae/transfer_function.hpp"

#include <cmath>
#include <limits>

namespace sostiae {

TransferFunction::TransferFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) {
        throw DomainError("transfer function denominator is the zero polynomial");
    }
    double lead = den.leading();
    num_ = num.scaled(1.0 / lead);
    den_ = den.scaled(1.0 / lead);
}

void validate(const PidGains& g) {
    for (double k : {g.kp, g.ki, g.kd}) {
        if (!std::isfinite(k) || k < 0.0) {
            throw DomainError("PID gains must be finite and non-negative");
        }
    }
}

TransferFunction pid_tf(const PidGains& g) {
    validate(g);
    if (g.kd == 0.0 && g.ki == 0.0) {
        return {Polynomial{g.kp}, Polynomial{1.0}};
    }
    if (g.kd == 0.0) {
        return {Polynomial{g.kp, g.ki}, Polynomial{1.0, 0.0}};
    }
    return {Polynomial{g.kd, g.kp, g.ki}, Polynomial{1.0, 0.0}};
}

TransferFunction series(const TransferFunction& a, const TransferFunction& b) {
    return {a.num() * b.num(), a.den() * b.den()};
}

TransferFunction unity_feedback(const TransferFunction& l) {
    if (!l.is_proper()) {
        throw ImproperClosedLoop(
            "loop gain is improper; the closed loop would differentiate its input "
            "(hint: drop the derivative term for a relative-degree-0 plant)");
    }
    return {l.num(), l.den() + l.num()};
}

double dc_gain(const TransferFunction& tf) {
    double n0 = tf.num().eval(0.0);
    double d0 = tf.den().eval(0.0);
    if (d0 == 0.0) {
        if (n0 == 0.0) {
            throw IndeterminateGain("DC gain is 0/0; cancel the integrator pair first");
        }
        return n0 > 0.0 ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
    }
    return n0 / d0;
}

}  // namespace sostiae
