#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sostiae/tuner.hpp"

namespace sostiae {
namespace bench {

/// How a single expected value is checked against the measurement.
enum class CheckMode {
    RelPct,    // |measured - value| <= tol/100 * |value|
    AbsPp,     // |measured - value| <= tol (percentage points / seconds)
    UpperRel,  // measured <= value * (1 + tol/100)
    UpperAbs,  // measured <= value + tol
};

struct Check {
    double value = 0.0;
    double tol = 0.0;
    CheckMode mode = CheckMode::RelPct;

    bool passes(double measured) const;
};

/// One published row (fixed gains) or one self-tuning regression case.
struct BenchCase {
    std::string name;
    TransferFunction plant;
    double horizon = 12.5;                 // seconds; grid is 0:0.01:horizon
    std::optional<PidGains> gains;         // fixed-gain evaluation when set
    std::optional<SecondOrderSpec> spec;   // tuning case when set
    std::optional<Check> ts;
    std::optional<Check> po;
    Check iae;
    bool ie_identity = false;              // zero-overshoot rows: |IAE - 1/ki| < 2%
};

struct FieldResult {
    double measured = 0.0;
    bool checked = false;
    bool pass = true;
};

struct BenchOutcome {
    std::string name;
    FieldResult ts;
    FieldResult po;
    FieldResult iae;
    FieldResult ie;       // IE = 1/Ki cross-check, when requested
    PidGains gains;       // the gains that were evaluated (tuned or fixed)
    bool stable = false;
    bool pass = false;
};

std::vector<BenchCase> table1_cases();
std::vector<BenchCase> astrom_g3_cases();

BenchOutcome run_case(const BenchCase& c);

/// Six published-gain rows of the order-1..3 comparison plus the three
/// self-tuning regression cases (ts=2.5, po=1, budget 3000, zero start).
std::vector<BenchOutcome> run_table1();

/// Five PI rows on 1/(s+1)^3 from the published benchmark comparison,
/// each on a horizon of 5x its own reported settling time (min 60 s).
std::vector<BenchOutcome> run_astrom_g3();

std::string format_table(const std::vector<BenchOutcome>& outcomes);

}  // namespace bench
}  // namespace sostiae
