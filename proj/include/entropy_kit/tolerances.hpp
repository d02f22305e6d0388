#pragma once

namespace entropy_kit {

// Every numeric threshold used by validation and by the check harness.
struct Tolerances {
    double hermitian = 1e-12;    // relative to max |entry|
    double trace = 1e-10;        // |tr(rho) - 1|
    double psd = 1e-10;          // eigenvalues in [-psd, 0) are clipped to 0
    double reconstruction = 1e-10;
    double probability = 1e-10;  // |sum p_i - 1|
    double unit_norm = 1e-10;
    double projector = 1e-10;    // idempotence / orthogonality / completeness
    double rank = 1e-12;         // eigenvalue counted as nonzero above this
    double ensemble_drop = 1e-14;
    double q_limit = 1e-7;       // |q - 1| below this -> Shannon / von Neumann
    double s_limit = 1e-9;       // |s| below this -> Renyi
    double check = 1e-8;         // harness slack: check * (1 + scale)
};

inline constexpr Tolerances kTol{};

}  // namespace entropy_kit
