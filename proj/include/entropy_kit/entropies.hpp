#pragma once

// Renyi, Tsallis, type-q and unified (q,s)-entropies, classical and quantum.
// Natural logarithms throughout; 0^q = 0 and 0 ln 0 = 0.

#include <span>

#include "entropy_kit/linops.hpp"

namespace entropy_kit {

/// Entropic index pair. q -> 1 (Shannon / von Neumann) takes precedence over
/// s -> 0 (Renyi).
struct UnifiedParams {
    double q;
    double s;

    UnifiedParams(double q, double s);

    bool is_q_limit() const;
    bool is_s_limit() const;
};

/// (x^{1-q} - 1)/(1 - q), ln x near q = 1.
double q_log(double x, double q);

double shannon(std::span<const double> p);
double shannon(const ProbabilityDistribution& p);

double renyi(const ProbabilityDistribution& p, double q);
double tsallis(const ProbabilityDistribution& p, double q);
double type_q_entropy(const ProbabilityDistribution& p, double q);
double unified_classical(const ProbabilityDistribution& p, const UnifiedParams& params);

/// Unified entropy of arbitrary non-negative weights (a spectrum or a
/// distribution); no normalization check.
double unified_of_weights(std::span<const double> w, const UnifiedParams& params);
/// Unified entropy from t = sum p_i^q alone. Undefined at the q-limit, where
/// the value depends on more than t.
double unified_from_trace_power(double t, const UnifiedParams& params);

double von_neumann(const DensityOperator& rho);
double quantum_renyi(const DensityOperator& rho, double q);
double quantum_tsallis(const DensityOperator& rho, double q);
double unified_quantum(const DensityOperator& rho, const UnifiedParams& params);

/// H_q(eps, 1 - eps).
double binary_tsallis(double eps, double q);

}  // namespace entropy_kit
