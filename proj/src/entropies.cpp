#include "entropy_kit/entropies.hpp"

#include <cmath>
#include <string>

namespace entropy_kit {

namespace {

std::span<const double> as_span(const RealVector& v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

void require_positive_q(double q) {
    if (!(q > 0.0)) throw InvalidIndex("entropic index q must be positive, got " + std::to_string(q));
}

// t - 1 with t = sum w_i^q, accumulated as sum w_i (w_i^{q-1} - 1) so that
// the cancellation near q = 1 happens term by term.
double trace_power_minus_one(std::span<const double> w, double q) {
    double acc = 0.0;
    double total = 0.0;
    for (double x : w) {
        if (x <= 0.0) continue;
        acc += x * std::expm1((q - 1.0) * std::log(x));
        total += x;
    }
    return acc + (total - 1.0);
}

}  // namespace

UnifiedParams::UnifiedParams(double q_, double s_) : q(q_), s(s_) {
    require_positive_q(q);
    if (!std::isfinite(q) || !std::isfinite(s)) throw InvalidIndex("entropic indices must be finite");
}

bool UnifiedParams::is_q_limit() const { return std::abs(q - 1.0) < kTol.q_limit; }

bool UnifiedParams::is_s_limit() const { return !is_q_limit() && std::abs(s) < kTol.s_limit; }

double q_log(double x, double q) {
    if (!(x > 0.0)) throw DomainError("q-logarithm needs x > 0, got " + std::to_string(x));
    const double lx = std::log(x);
    if (std::abs(q - 1.0) < kTol.q_limit) return lx;
    return std::expm1((1.0 - q) * lx) / (1.0 - q);
}

double shannon(std::span<const double> p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log(x);
    }
    return h;
}

double shannon(const ProbabilityDistribution& p) { return shannon(p.probs()); }

double unified_of_weights(std::span<const double> w, const UnifiedParams& params) {
    if (params.is_q_limit()) return shannon(w);
    const double log_t = std::log1p(trace_power_minus_one(w, params.q));
    if (params.is_s_limit()) return log_t / (1.0 - params.q);
    return std::expm1(params.s * log_t) / ((1.0 - params.q) * params.s);
}

double unified_from_trace_power(double t, const UnifiedParams& params) {
    if (params.is_q_limit()) throw InvalidIndex("trace power alone does not determine the q -> 1 limit");
    if (!(t > 0.0)) throw DomainError("trace power must be positive");
    const double log_t = std::log(t);
    if (params.is_s_limit()) return log_t / (1.0 - params.q);
    return std::expm1(params.s * log_t) / ((1.0 - params.q) * params.s);
}

double renyi(const ProbabilityDistribution& p, double q) {
    return unified_of_weights(p.probs(), UnifiedParams(q, 0.0));
}

double tsallis(const ProbabilityDistribution& p, double q) {
    return unified_of_weights(p.probs(), UnifiedParams(q, 1.0));
}

double type_q_entropy(const ProbabilityDistribution& p, double q) {
    require_positive_q(q);
    if (std::abs(q - 1.0) < kTol.q_limit) return shannon(p);
    // Unified entropy at index 1/q with s = q.
    return unified_of_weights(p.probs(), UnifiedParams(1.0 / q, q));
}

double unified_classical(const ProbabilityDistribution& p, const UnifiedParams& params) {
    return unified_of_weights(p.probs(), params);
}

double von_neumann(const DensityOperator& rho) { return shannon(as_span(rho.eigenvalues())); }

double quantum_renyi(const DensityOperator& rho, double q) {
    return unified_of_weights(as_span(rho.eigenvalues()), UnifiedParams(q, 0.0));
}

double quantum_tsallis(const DensityOperator& rho, double q) {
    return unified_of_weights(as_span(rho.eigenvalues()), UnifiedParams(q, 1.0));
}

double unified_quantum(const DensityOperator& rho, const UnifiedParams& params) {
    return unified_of_weights(as_span(rho.eigenvalues()), params);
}

double binary_tsallis(double eps, double q) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("binary entropy needs eps in [0, 1], got " + std::to_string(eps));
    const double p[2] = {eps, 1.0 - eps};
    return unified_of_weights(p, UnifiedParams(q, 1.0));
}

}  // namespace entropy_kit
