#pragma once

#include <complex>
#include <vector>

#include "sostiae/transfer_function.hpp"

namespace sostiae {

/// Pole-based stability classification. `marginal` flags numerically
/// undecidable verdicts (|max Re| < 1e-7) instead of rounding them away.
struct StabilityVerdict {
    bool stable = false;
    std::vector<std::complex<double>> poles;
    double max_real_part = 0.0;
    bool marginal = false;
};

inline constexpr double kMarginalTol = 1e-7;

/// All complex roots with multiplicity, via eigenvalues of the companion
/// matrix of the monic polynomial. Throws DegreeZero for constants.
std::vector<std::complex<double>> roots(const Polynomial& p);

/// Strict Hurwitz test on the poles of a proper transfer function.
/// A constant tf is vacuously stable with an empty pole list.
StabilityVerdict is_stable(const TransferFunction& tf);

}  // namespace sostiae
