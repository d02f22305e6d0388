#include <cmath>
#include <string>

#include "entropy_kit/bounds.hpp"
#include "entropy_kit/verify.hpp"

namespace entropy_kit {

StabilityExample::StabilityExample(StabilityVariant variant_, double eps_, std::uint64_t d_, double q_, double s_)
    : variant(variant_), eps(eps_), d(d_), q(q_), s(s_) {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidIndex("stability example needs eps in (0, 1), got " + std::to_string(eps));
    if (d < 2) throw InvalidIndex("stability example needs d >= 2");
    if (!(q > 0.0)) throw InvalidIndex("stability example needs q > 0");
}

double stability_ratio(const StabilityExample& ex) {
    const UnifiedParams p(ex.q, ex.s);
    const double eps = ex.eps;
    const double log_rest = std::log(static_cast<double>(ex.d - 1));
    double e_rho = 0.0;
    double e_omega = 0.0;
    if (p.is_q_limit()) {
        if (ex.variant == StabilityVariant::Example0) {
            e_omega = -(1.0 - eps) * std::log1p(-eps) - eps * (std::log(eps) - log_rest);
        } else {
            e_rho = log_rest;
            e_omega = -eps * std::log(eps) - (1.0 - eps) * (std::log1p(-eps) - log_rest);
        }
    } else {
        // (d - 1)^{1 - q}: the q-th power trace of a flat block of d - 1 levels.
        const double flat = std::exp((1.0 - ex.q) * log_rest);
        const double eps_q = std::pow(eps, ex.q);
        const double rest_q = std::pow(1.0 - eps, ex.q);
        if (ex.variant == StabilityVariant::Example0) {
            e_omega = unified_from_trace_power(rest_q + eps_q * flat, p);
        } else {
            e_rho = unified_from_trace_power(flat, p);
            e_omega = unified_from_trace_power(eps_q + rest_q * flat, p);
        }
    }
    return std::abs(e_rho - e_omega) / max_unified(ex.q, ex.s, ex.d);
}

std::pair<DensityOperator, DensityOperator> stability_states(const StabilityExample& ex) {
    if (ex.d > 4096) throw InvalidIndex("dense stability states limited to d <= 4096");
    const auto d = static_cast<std::size_t>(ex.d);
    const double rest = 1.0 / static_cast<double>(d - 1);
    std::vector<double> rho(d, 0.0);
    std::vector<double> omega(d, 0.0);
    if (ex.variant == StabilityVariant::Example0) {
        rho[0] = 1.0;
        omega.assign(d, ex.eps * rest);
        omega[0] = 1.0 - ex.eps;
    } else {
        rho.assign(d, rest);
        rho[0] = 0.0;
        omega.assign(d, (1.0 - ex.eps) * rest);
        omega[0] = ex.eps;
    }
    return {DensityOperator::from_diagonal(rho), DensityOperator::from_diagonal(omega)};
}

}  // namespace entropy_kit
