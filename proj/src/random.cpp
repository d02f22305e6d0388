#include "entropy_kit/random.hpp"

#include <cmath>
#include <string>

namespace entropy_kit {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

double Rng::normal() { return normal_(engine_); }

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

Matrix Rng::ginibre(std::size_t rows, std::size_t cols) {
    Matrix g(rows, cols);
    // Column-major fill order is part of the determinism contract.
    for (Eigen::Index j = 0; j < g.cols(); ++j)
        for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = complex_normal();
    return g;
}

DensityOperator random_density(std::size_t d, std::size_t rank, Rng& rng) {
    if (d < 1 || rank < 1 || rank > d) {
        throw InvalidIndex("random_density needs 1 <= rank <= d, got d=" + std::to_string(d) +
                           " rank=" + std::to_string(rank));
    }
    const Matrix g = rng.ginibre(d, rank);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(std::move(rho));
}

DensityOperator random_density(std::size_t d, std::size_t rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(d, rank, rng);
}

Isometry random_unitary(std::size_t d, Rng& rng) {
    if (d < 1) throw InvalidIndex("random_unitary needs d >= 1");
    const Matrix g = rng.ginibre(d, d);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) q.col(j) *= rjj / mag;
    }
    return Isometry(std::move(q));
}

Isometry random_unitary(std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    return random_unitary(d, rng);
}

Isometry random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
    if (cols < 1 || cols > rows) throw InvalidIndex("random_isometry needs 1 <= cols <= rows");
    const Isometry u = random_unitary(rows, rng);
    return Isometry(Matrix(u.matrix().leftCols(static_cast<Eigen::Index>(cols))));
}

std::vector<std::size_t> random_composition(std::size_t d, Rng& rng) {
    if (d < 2 || d > 63) throw InvalidIndex("random_composition needs 2 <= d <= 63");
    // Bit k of the mask places a cut after position k + 1; a nonempty mask
    // gives at least two parts.
    const std::uint64_t max_mask = (std::uint64_t{1} << (d - 1)) - 1;
    const std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(1, max_mask)(rng.engine());
    std::vector<std::size_t> parts;
    std::size_t run = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (mask & (std::uint64_t{1} << k)) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return parts;
}

OrthogonalResolution random_resolution(std::size_t d, Rng& rng) {
    const auto ranks = random_composition(d, rng);
    const Isometry u = random_unitary(d, rng);
    return OrthogonalResolution::from_blocks(u.matrix(), ranks);
}

ProbabilityDistribution random_distribution(std::size_t m, Rng& rng) {
    if (m < 1) throw InvalidIndex("random_distribution needs m >= 1");
    std::vector<double> p(m);
    double total = 0.0;
    for (auto& x : p) {
        x = -std::log1p(-rng.uniform());
        total += x;
    }
    for (auto& x : p) x /= total;
    return ProbabilityDistribution(std::move(p));
}

PureStateEnsemble ensemble_from_state(const DensityOperator& rho, std::size_t m, Rng& rng) {
    const std::size_t r = rho.rank();
    if (m < r) {
        throw InvalidIndex("ensemble size m=" + std::to_string(m) + " below rank(rho)=" + std::to_string(r));
    }
    return ensemble_from_isometry(rho, random_isometry(m, r, rng));
}

PureStateEnsemble ensemble_from_state(const DensityOperator& rho, std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    return ensemble_from_state(rho, m, rng);
}

}  // namespace entropy_kit
