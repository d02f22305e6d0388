#pragma once

// Internal helpers shared by the check implementations.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

#include "entropy_kit/matrix_io.hpp"
#include "entropy_kit/random.hpp"
#include "entropy_kit/verify.hpp"

namespace entropy_kit::detail {

/// Thread cap: ENTROPY_KIT_THREADS if set to a positive integer, otherwise
/// the hardware concurrency. Results do not depend on it.
inline std::size_t worker_limit() {
    if (const char* env = std::getenv("ENTROPY_KIT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(trial, tally) for trial in [0, n). Trials are split into
/// contiguous blocks whose tallies are merged in trial order, so the result
/// is identical for any number of workers.
template <class Fn>
Tally run_trials(std::size_t n, bool reversed, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(worker_limit(), (n + 63) / 64);
    if (workers <= 1) {
        Tally t(reversed);
        for (std::size_t k = 0; k < n; ++k) fn(k, t);
        return t;
    }
    std::vector<Tally> parts(workers, Tally(reversed));
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::size_t lo = n * w / workers;
                const std::size_t hi = n * (w + 1) / workers;
                try {
                    for (std::size_t k = lo; k < hi; ++k) fn(k, parts[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Tally total(reversed);
    for (const auto& p : parts) total.merge(p);
    return total;
}

inline Rng trial_rng(std::uint64_t seed, std::size_t trial) { return Rng(mix_seed(seed, trial)); }

template <class T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
    return xs[rng.index(0, xs.size() - 1)];
}

inline DensityOperator random_state_any_rank(std::size_t d, Rng& rng) {
    return random_density(d, rng.index(1, d), rng);
}

/// GUE sample (G + G^dagger)/2.
inline Matrix random_hermitian(std::size_t d, Rng& rng) {
    const Matrix g = rng.ginibre(d, d);
    return 0.5 * (g + g.adjoint());
}

/// exp(i theta H) for Hermitian H.
inline Matrix unitary_exp(const Matrix& h, double theta) {
    const auto spec = spectral_decompose(HermitianOperator(h));
    Vector phases(spec.eigenvalues.size());
    for (Eigen::Index j = 0; j < phases.size(); ++j) phases(j) = std::polar(1.0, theta * spec.eigenvalues(j));
    return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

/// Bipartite sample drawn from a mixture of full-rank, low-rank, product and
/// pure states.
inline DensityOperator random_bipartite(std::size_t da, std::size_t db, Rng& rng) {
    const std::size_t d = da * db;
    switch (rng.index(0, 3)) {
        case 0:
            return random_density(d, d, rng);
        case 1:
            return random_state_any_rank(d, rng);
        case 2: {
            const auto a = random_state_any_rank(da, rng);
            const auto b = random_state_any_rank(db, rng);
            return tensor(a, b);
        }
        default:
            return random_density(d, 1, rng);
    }
}

inline nlohmann::json grid_point_json(const GridPoint& g) { return {{"q", g.q}, {"s", g.s}}; }

inline nlohmann::json instance(std::size_t trial, const GridPoint& g, const DensityOperator& rho) {
    return {{"trial", trial}, {"q", g.q}, {"s", g.s}, {"d", rho.dim()}, {"rho", matrix_to_json(rho.matrix())}};
}

}  // namespace entropy_kit::detail
