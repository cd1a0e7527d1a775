#pragma once

#include "sostiae/errors.hpp"
#include "sostiae/polynomial.hpp"

namespace sostiae {

/// Rational function num(s)/den(s). The denominator is normalized to monic at
/// construction. Improper ratios are representable (a PID block is improper on
/// its own); properness is enforced where it matters: realization, simulation
/// and feedback closure.
class TransferFunction {
public:
    TransferFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    /// deg(den) - deg(num); negative for improper ratios.
    int relative_degree() const { return den_.degree() - num_.degree(); }
    bool is_proper() const { return relative_degree() >= 0; }
    bool is_biproper() const { return relative_degree() == 0 && !num_.is_zero(); }

private:
    Polynomial num_;
    Polynomial den_;
};

/// Non-negative PID gain triple, the decision vector of the tuner.
struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
};

/// Validate finiteness and non-negativity; throws DomainError.
void validate(const PidGains& g);

/// Parallel unfiltered PID as a rational block:
/// (kd s^2 + kp s + ki)/s, degenerating to (kp s + ki)/s for kd = 0
/// and to the pure gain kp/1 for kd = ki = 0.
TransferFunction pid_tf(const PidGains& g);

/// Cascade a*b with no pole-zero cancellation.
TransferFunction series(const TransferFunction& a, const TransferFunction& b);

/// Unit negative feedback T = L/(1+L) = l.num/(l.den + l.num).
/// Throws ImproperClosedLoop when the loop gain is improper (unfiltered
/// derivative against a relative-degree-0 plant).
TransferFunction unity_feedback(const TransferFunction& l);

/// num(0)/den(0). Signed infinity when den(0)=0 and num(0)!=0;
/// throws IndeterminateGain on 0/0.
double dc_gain(const TransferFunction& tf);

}  // namespace sostiae
