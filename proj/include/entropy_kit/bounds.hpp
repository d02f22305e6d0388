#pragma once

// Closed-form Fannes-type continuity bounds and Lesche stability functionals.
// Every bound refuses to evaluate outside the parameter range where it is
// proven (OutOfValidity) instead of extrapolating.

#include <cstdint>

namespace entropy_kit {

struct BoundSpec {
    double q;
    double s;
    std::uint64_t d;
    double eps;  // trace distance

    BoundSpec(double q, double s, std::uint64_t d, double eps);
};

enum class FannesRange {
    LowQ,   // 0 < q < 1, s in (-inf, -1] u [0, 1], needs 2 eps <= q^{1/(1-q)}
    HighQ,  // q > 1, s in [-1, 0] u [1, inf)
    None,
};

FannesRange fannes_range(double q, double s);

/// eta_q(x) = (x^q - x)/(1 - q); -x ln x at q = 1.
double eta_q(double x, double q);
/// q^{1/(1-q)}, the largest admissible 2 eps of the low-q bound (1/e at q = 1).
double low_q_window(double q);

/// (2 eps)^q ln_q d + eta_q(2 eps) for q in (0, 2].
double fannes_tsallis_low_q(const BoundSpec& spec);
/// eps^q ln_q(d - 1) + H_q(eps, 1 - eps) for q > 1.
double fannes_tsallis_high_q(const BoundSpec& spec);
double kappa_s(double q, double s, std::uint64_t d);
double unified_fannes_bound(const BoundSpec& spec);
/// 2 q/(q - 1) eps, valid for q > 1, s >= 1.
double lipschitz_bound(double eps, double q);

/// Maximum of the unified entropy on dimension d (ln d at s = 0 or q = 1).
double max_unified(double q, double s, std::uint64_t d);
/// unified_fannes_bound / max_unified.
double stability_ratio_bound(const BoundSpec& spec);
/// Right end of the interval on which stability_ratio_bound increases.
double stability_monotone_limit(double q, double s, std::uint64_t d);
/// d -> infinity limit of stability_ratio_bound for q > 1, s >= 1:
/// s (1 - (1 - eps)^q).
double thermodynamic_limit_ratio(double q, double s, double eps);

}  // namespace entropy_kit
