#include "entropy_kit/linops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace entropy_kit {

namespace {

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const Matrix& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw DimMismatch(std::string(what) + ": expected a non-empty square matrix, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                          std::to_string(b));
    }
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix entries) {
    require_square(entries, "HermitianOperator");
    const double scale = max_abs(entries);
    const double asym = max_abs(entries - entries.adjoint());
    if (asym > kTol.hermitian * scale) {
        throw NonHermitian("matrix is not Hermitian: max |A - A^dagger| = " + std::to_string(asym));
    }
    entries_ = 0.5 * (entries + entries.adjoint());
}

HermitianOperator HermitianOperator::identity(std::size_t d) {
    return HermitianOperator(Matrix::Identity(d, d));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> diag) {
    Matrix m = Matrix::Zero(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return HermitianOperator(std::move(m));
}

Spectrum spectral_decompose(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw DomainError("eigendecomposition did not converge");
    }
    // Eigen sorts ascending.
    Spectrum s;
    s.eigenvalues = solver.eigenvalues().reverse();
    s.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return s;
}

DensityOperator::DensityOperator(HermitianOperator op) : op_(std::move(op)) {
    const double tr = op_.matrix().trace().real();
    if (std::abs(tr - 1.0) > kTol.trace) {
        throw DomainError("density operator must have unit trace, got " + std::to_string(tr));
    }
    spectrum_ = spectral_decompose(op_);
    auto& ev = spectrum_.eigenvalues;
    if (ev.minCoeff() < -kTol.psd) {
        throw NotPositive("density operator has negative eigenvalue " + std::to_string(ev.minCoeff()));
    }
    // Eigenvalues at the rank threshold are solver noise around an exact zero;
    // left in, they would dominate x^q for small q.
    for (auto& x : ev) x = x <= kTol.rank ? 0.0 : std::min(x, 1.0);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t d) {
    return DensityOperator(Matrix(Matrix::Identity(d, d) / static_cast<double>(d)));
}

DensityOperator DensityOperator::from_diagonal(std::span<const double> probs) {
    return DensityOperator(HermitianOperator::diagonal(probs));
}

DensityOperator DensityOperator::from_pure(const Vector& psi) {
    if (std::abs(psi.norm() - 1.0) > kTol.unit_norm) {
        throw DomainError("pure state vector is not normalized");
    }
    return DensityOperator(Matrix(psi * psi.adjoint()));
}

std::size_t DensityOperator::rank(double threshold) const {
    const auto& ev = spectrum_.eigenvalues;
    return static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [&](double x) { return x > threshold; }));
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw DomainError("probability distribution is empty");
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) throw DomainError("probability entries must be non-negative, got " + std::to_string(p));
        total += p;
    }
    if (std::abs(total - 1.0) > kTol.probability) {
        throw DomainError("probabilities must sum to 1, got " + std::to_string(total));
    }
}

ProbabilityDistribution ProbabilityDistribution::uniform(std::size_t m) {
    return ProbabilityDistribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

Isometry::Isometry(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.cols() == 0 || entries_.rows() < entries_.cols()) {
        throw DimMismatch("isometry must be m x r with m >= r >= 1");
    }
    const Matrix gram = entries_.adjoint() * entries_;
    const double err = max_abs(gram - Matrix::Identity(gram.rows(), gram.cols()));
    if (err > kTol.reconstruction) {
        throw DomainError("columns are not orthonormal: max |U^dagger U - I| = " + std::to_string(err));
    }
}

PureStateEnsemble::PureStateEnsemble(ProbabilityDistribution weights, std::vector<Vector> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
    if (states_.size() != weights_.size()) {
        throw DimMismatch("ensemble has " + std::to_string(weights_.size()) + " weights but " +
                          std::to_string(states_.size()) + " states");
    }
    for (const auto& psi : states_) {
        require_same_dim(static_cast<std::size_t>(psi.size()), static_cast<std::size_t>(states_.front().size()),
                         "PureStateEnsemble");
        if (std::abs(psi.norm() - 1.0) > kTol.unit_norm) throw DomainError("ensemble member is not a unit vector");
    }
    (void)average();
}

DensityOperator PureStateEnsemble::average() const {
    const auto d = states_.front().size();
    Matrix rho = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < states_.size(); ++i) {
        rho += weights_[i] * states_[i] * states_[i].adjoint();
    }
    return DensityOperator(std::move(rho));
}

OrthogonalResolution::OrthogonalResolution(std::vector<HermitianOperator> projectors)
    : projectors_(std::move(projectors)) {
    if (projectors_.empty()) throw DomainError("orthogonal resolution needs at least one projector");
    const auto d = projectors_.front().dim();
    Matrix sum = Matrix::Zero(d, d);
    for (std::size_t j = 0; j < projectors_.size(); ++j) {
        const Matrix& nj = projectors_[j].matrix();
        require_same_dim(projectors_[j].dim(), d, "OrthogonalResolution");
        if (max_abs(nj * nj - nj) > kTol.projector) throw DomainError("resolution member is not a projector");
        for (std::size_t k = 0; k < j; ++k) {
            if (max_abs(nj * projectors_[k].matrix()) > kTol.projector) {
                throw DomainError("resolution projectors are not mutually orthogonal");
            }
        }
        sum += nj;
    }
    if (max_abs(sum - Matrix::Identity(d, d)) > kTol.projector) {
        throw DomainError("resolution projectors do not sum to the identity");
    }
}

OrthogonalResolution OrthogonalResolution::computational_basis(std::size_t d) {
    std::vector<std::size_t> ones(d, 1);
    return from_blocks(Matrix::Identity(d, d), ones);
}

OrthogonalResolution OrthogonalResolution::from_blocks(const Matrix& unitary, std::span<const std::size_t> ranks) {
    std::vector<HermitianOperator> projectors;
    Eigen::Index offset = 0;
    for (std::size_t r : ranks) {
        if (r == 0 || offset + static_cast<Eigen::Index>(r) > unitary.cols()) {
            throw InvalidIndex("block ranks must be positive and fit within the unitary");
        }
        const Matrix v = unitary.middleCols(offset, static_cast<Eigen::Index>(r));
        projectors.emplace_back(Matrix(v * v.adjoint()));
        offset += static_cast<Eigen::Index>(r);
    }
    return OrthogonalResolution(std::move(projectors));
}

GeneralizedMeasurement::GeneralizedMeasurement(std::vector<Matrix> operators) : operators_(std::move(operators)) {
    if (operators_.empty()) throw IncompleteMeasurement("measurement has no operators");
    const auto d = operators_.front().rows();
    Matrix sum = Matrix::Zero(d, d);
    for (const auto& m : operators_) {
        require_square(m, "GeneralizedMeasurement");
        require_same_dim(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(d), "GeneralizedMeasurement");
        sum += m.adjoint() * m;
    }
    const double err = max_abs(sum - Matrix::Identity(d, d));
    if (err > kTol.projector) {
        throw IncompleteMeasurement("completeness relation violated: max |sum M^dagger M - I| = " +
                                    std::to_string(err));
    }
}

GeneralizedMeasurement GeneralizedMeasurement::from_resolution(const OrthogonalResolution& r) {
    std::vector<Matrix> ops;
    ops.reserve(r.size());
    for (const auto& p : r.projectors()) ops.push_back(p.matrix());
    return GeneralizedMeasurement(std::move(ops));
}

BipartiteState::BipartiteState(DensityOperator rho_ab, std::size_t dim_a, std::size_t dim_b)
    : rho_ab_(std::move(rho_ab)), dim_a_(dim_a), dim_b_(dim_b) {
    require_same_dim(dim_a * dim_b, rho_ab_.dim(), "BipartiteState");
}

namespace {

// (sum x_j^q)^{1/q} over non-negative x, scaled by the max to avoid overflow.
double power_norm(const RealVector& x, double q) {
    const double top = x.maxCoeff();
    if (top <= 0.0) return 0.0;
    double acc = 0.0;
    for (double v : x) {
        if (v > 0.0) acc += std::pow(v / top, q);
    }
    return top * std::pow(acc, 1.0 / q);
}

}  // namespace

double schatten_norm(const HermitianOperator& a, double q) {
    if (!(q >= 1.0)) throw InvalidIndex("Schatten norm needs q >= 1, got " + std::to_string(q));
    return power_norm(spectral_decompose(a).eigenvalues.cwiseAbs(), q);
}

double schatten_norm(const DensityOperator& rho, double q) {
    if (!(q >= 1.0)) throw InvalidIndex("Schatten norm needs q >= 1, got " + std::to_string(q));
    return power_norm(rho.eigenvalues(), q);
}

double kyfan_norm(std::span<const double> x, std::size_t k) {
    if (k < 1 || k > x.size()) {
        throw InvalidIndex("Ky Fan index k=" + std::to_string(k) + " outside [1, " + std::to_string(x.size()) + "]");
    }
    std::vector<double> sv(x.size());
    std::transform(x.begin(), x.end(), sv.begin(), [](double v) { return std::abs(v); });
    std::partial_sort(sv.begin(), sv.begin() + static_cast<std::ptrdiff_t>(k), sv.end(), std::greater<>());
    return std::accumulate(sv.begin(), sv.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

double kyfan_norm(const HermitianOperator& a, std::size_t k) {
    const RealVector ev = spectral_decompose(a).eigenvalues;
    return kyfan_norm(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())), k);
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
    require_same_dim(a.dim(), b.dim(), "trace_distance");
    const Matrix diff = a.matrix() - b.matrix();
    return 0.5 * spectral_decompose(HermitianOperator(diff)).eigenvalues.cwiseAbs().sum();
}

double trace_power(const DensityOperator& rho, double q) {
    if (!(q > 0.0)) throw InvalidIndex("trace power needs q > 0, got " + std::to_string(q));
    double acc = 0.0;
    for (double lam : rho.eigenvalues()) {
        if (lam > 0.0) acc += std::pow(lam, q);
    }
    return acc;
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    const auto da = static_cast<Eigen::Index>(a.dim());
    const auto db = static_cast<Eigen::Index>(b.dim());
    Matrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
        }
    }
    return DensityOperator(std::move(out));
}

DensityOperator partial_trace(const BipartiteState& s, Subsystem keep) {
    const auto da = static_cast<Eigen::Index>(s.dim_a());
    const auto db = static_cast<Eigen::Index>(s.dim_b());
    const Matrix& rho = s.rho_ab().matrix();
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(da, da);
        for (Eigen::Index i = 0; i < da; ++i)
            for (Eigen::Index j = 0; j < da; ++j)
                for (Eigen::Index b = 0; b < db; ++b) out(i, j) += rho(i * db + b, j * db + b);
        return DensityOperator(std::move(out));
    }
    Matrix out = Matrix::Zero(db, db);
    for (Eigen::Index i = 0; i < db; ++i)
        for (Eigen::Index j = 0; j < db; ++j)
            for (Eigen::Index a = 0; a < da; ++a) out(i, j) += rho(a * db + i, a * db + j);
    return DensityOperator(std::move(out));
}

Vector purify(const DensityOperator& rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    const auto& spec = rho.spectrum();
    Vector psi = Vector::Zero(d * d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const double w = std::sqrt(spec.eigenvalues(j));
        if (w == 0.0) continue;
        for (Eigen::Index i = 0; i < d; ++i) psi(i * d + j) = w * spec.eigenvectors(i, j);
    }
    return psi / psi.norm();
}

HermitianOperator pinch(const HermitianOperator& a, const OrthogonalResolution& r) {
    require_same_dim(a.dim(), r.dim(), "pinch");
    Matrix out = Matrix::Zero(a.dim(), a.dim());
    for (const auto& n : r.projectors()) out += n.matrix() * a.matrix() * n.matrix();
    return HermitianOperator(std::move(out));
}

DensityOperator pinch(const DensityOperator& rho, const OrthogonalResolution& r) {
    return DensityOperator(pinch(rho.op(), r));
}

DensityOperator apply_generalized(const DensityOperator& rho, const GeneralizedMeasurement& m) {
    require_same_dim(rho.dim(), m.dim(), "apply_generalized");
    Matrix out = Matrix::Zero(rho.dim(), rho.dim());
    for (const auto& op : m.operators()) out += op * rho.matrix() * op.adjoint();
    return DensityOperator(std::move(out));
}

DensityOperator conjugate(const DensityOperator& rho, const Isometry& u) {
    if (u.rows() != u.cols()) throw DimMismatch("conjugation needs a square unitary");
    require_same_dim(rho.dim(), u.rows(), "conjugate");
    return DensityOperator(Matrix(u.matrix() * rho.matrix() * u.matrix().adjoint()));
}

PureStateEnsemble ensemble_from_isometry(const DensityOperator& rho, const Isometry& u) {
    const std::size_t r = rho.rank();
    if (u.cols() != r) {
        throw InvalidIndex("isometry has " + std::to_string(u.cols()) + " columns but rank(rho) = " +
                           std::to_string(r));
    }
    const auto& spec = rho.spectrum();
    const auto d = static_cast<Eigen::Index>(rho.dim());
    // Columns are sqrt(lambda_j) phi_j for the nonzero eigenpairs.
    Matrix scaled(d, static_cast<Eigen::Index>(r));
    for (std::size_t j = 0; j < r; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        scaled.col(jj) = std::sqrt(spec.eigenvalues(jj)) * spec.eigenvectors.col(jj);
    }
    std::vector<double> weights;
    std::vector<Vector> states;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(u.rows()); ++i) {
        const Vector v = scaled * u.matrix().row(i).transpose();
        const double p = v.squaredNorm();
        if (p < kTol.ensemble_drop) continue;
        weights.push_back(p);
        states.emplace_back(v / std::sqrt(p));
    }
    return PureStateEnsemble(ProbabilityDistribution(std::move(weights)), std::move(states));
}

}  // namespace entropy_kit
