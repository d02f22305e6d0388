#include "entropy_kit/bounds.hpp"

#include <cmath>
#include <string>

#include "entropy_kit/entropies.hpp"
#include "entropy_kit/errors.hpp"
#include "entropy_kit/tolerances.hpp"

namespace entropy_kit {

namespace {

bool near_one(double q) { return std::abs(q - 1.0) < kTol.q_limit; }

std::string describe(double q, double s) {
    return "(q=" + std::to_string(q) + ", s=" + std::to_string(s) + ")";
}

}  // namespace

BoundSpec::BoundSpec(double q_, double s_, std::uint64_t d_, double eps_) : q(q_), s(s_), d(d_), eps(eps_) {
    if (!(q > 0.0) || !std::isfinite(q) || !std::isfinite(s)) throw InvalidIndex("bound needs finite q > 0");
    if (d < 2) throw InvalidIndex("bound needs d >= 2");
    if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("trace distance must lie in [0, 1], got " + std::to_string(eps));
}

FannesRange fannes_range(double q, double s) {
    if (q > 0.0 && q < 1.0 && !near_one(q) && (s <= -1.0 || (s >= 0.0 && s <= 1.0))) return FannesRange::LowQ;
    if (q > 1.0 && !near_one(q) && ((s >= -1.0 && s <= 0.0) || s >= 1.0)) return FannesRange::HighQ;
    return FannesRange::None;
}

double eta_q(double x, double q) {
    if (!(q > 0.0)) throw InvalidIndex("eta_q needs q > 0");
    if (!(x >= 0.0)) throw DomainError("eta_q needs x >= 0");
    if (x == 0.0) return 0.0;
    const double lx = std::log(x);
    if (near_one(q)) return -x * lx;
    return x * std::expm1((q - 1.0) * lx) / (1.0 - q);
}

double low_q_window(double q) {
    if (!(q > 0.0)) throw InvalidIndex("low_q_window needs q > 0");
    if (near_one(q)) return std::exp(-1.0);
    return std::exp(std::log(q) / (1.0 - q));
}

double fannes_tsallis_low_q(const BoundSpec& spec) {
    if (!(spec.q <= 2.0)) throw InvalidIndex("low-q Tsallis bound needs q in (0, 2], got " + std::to_string(spec.q));
    const double two_eps = 2.0 * spec.eps;
    if (two_eps > low_q_window(spec.q)) {
        throw OutOfValidity("low-q bound needs 2 eps <= q^{1/(1-q)} = " + std::to_string(low_q_window(spec.q)));
    }
    if (two_eps == 0.0) return 0.0;
    return std::pow(two_eps, spec.q) * q_log(static_cast<double>(spec.d), spec.q) + eta_q(two_eps, spec.q);
}

double fannes_tsallis_high_q(const BoundSpec& spec) {
    if (!(spec.q > 1.0) || near_one(spec.q)) throw InvalidIndex("high-q Tsallis bound needs q > 1");
    if (spec.eps == 0.0) return 0.0;
    return std::pow(spec.eps, spec.q) * q_log(static_cast<double>(spec.d - 1), spec.q) +
           binary_tsallis(spec.eps, spec.q);
}

double kappa_s(double q, double s, std::uint64_t d) {
    if (!(q > 1.0)) throw InvalidIndex("kappa_s needs q > 1");
    if (s >= -1.0 && s <= 0.0) return std::exp(2.0 * (q - 1.0) * std::log(static_cast<double>(d)));
    if (s >= 1.0) return 1.0;
    throw OutOfValidity("kappa_s is defined for s in [-1, 0] u [1, inf), got s=" + std::to_string(s));
}

double unified_fannes_bound(const BoundSpec& spec) {
    switch (fannes_range(spec.q, spec.s)) {
        case FannesRange::LowQ:
            return fannes_tsallis_low_q(spec);
        case FannesRange::HighQ:
            return kappa_s(spec.q, spec.s, spec.d) * fannes_tsallis_high_q(spec);
        case FannesRange::None:
            break;
    }
    throw OutOfValidity("no continuity bound for " + describe(spec.q, spec.s));
}

double lipschitz_bound(double eps, double q) {
    if (!(q > 1.0) || near_one(q)) throw InvalidIndex("Lipschitz bound needs q > 1");
    if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("trace distance must lie in [0, 1]");
    return 2.0 * q / (q - 1.0) * eps;
}

double max_unified(double q, double s, std::uint64_t d) {
    if (!(q > 0.0)) throw InvalidIndex("max_unified needs q > 0");
    if (d < 1) throw InvalidIndex("max_unified needs d >= 1");
    const double ld = std::log(static_cast<double>(d));
    if (near_one(q) || std::abs(s) < kTol.s_limit) return ld;
    const double k = (1.0 - q) * s;
    return std::expm1(k * ld) / k;
}

double stability_ratio_bound(const BoundSpec& spec) {
    return unified_fannes_bound(spec) / max_unified(spec.q, spec.s, spec.d);
}

double stability_monotone_limit(double q, double s, std::uint64_t d) {
    switch (fannes_range(q, s)) {
        case FannesRange::LowQ:
            return 0.5 * low_q_window(q);
        case FannesRange::HighQ:
            return static_cast<double>(d - 1) / static_cast<double>(d);
        case FannesRange::None:
            break;
    }
    throw OutOfValidity("no continuity bound for " + describe(q, s));
}

double thermodynamic_limit_ratio(double q, double s, double eps) {
    if (!(q > 1.0) || !(s >= 1.0)) throw OutOfValidity("thermodynamic limit bound needs q > 1, s >= 1");
    if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("trace distance must lie in [0, 1]");
    return -s * std::expm1(q * std::log1p(-eps));
}

}  // namespace entropy_kit
