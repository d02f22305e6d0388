#pragma once

// Seeded sampling of test instances: Ginibre states, Haar unitaries,
// random orthogonal resolutions and pure-state ensembles.

#include <cstdint>
#include <random>
#include <vector>

#include "entropy_kit/linops.hpp"

namespace entropy_kit {

/// splitmix64 finalizer; used to derive independent per-trial streams.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0);
    /// Uniform integer in [lo, hi].
    std::size_t index(std::size_t lo, std::size_t hi);
    double normal();
    /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
    Complex complex_normal();
    Matrix ginibre(std::size_t rows, std::size_t cols);

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

DensityOperator random_density(std::size_t d, std::size_t rank, Rng& rng);
DensityOperator random_density(std::size_t d, std::size_t rank, std::uint64_t seed);

Isometry random_unitary(std::size_t d, Rng& rng);
Isometry random_unitary(std::size_t d, std::uint64_t seed);
/// First `cols` columns of a Haar unitary of size rows.
Isometry random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

/// Uniform over the compositions of d into at least two positive parts.
std::vector<std::size_t> random_composition(std::size_t d, Rng& rng);
OrthogonalResolution random_resolution(std::size_t d, Rng& rng);

/// Flat Dirichlet sample on m outcomes.
ProbabilityDistribution random_distribution(std::size_t m, Rng& rng);

/// Random pure-state ensemble of m members averaging to rho, built from an
/// m x rank(rho) Haar isometry.
PureStateEnsemble ensemble_from_state(const DensityOperator& rho, std::size_t m, Rng& rng);
PureStateEnsemble ensemble_from_state(const DensityOperator& rho, std::size_t m, std::uint64_t seed);

}  // namespace entropy_kit
