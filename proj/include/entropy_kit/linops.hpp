#pragma once

// Dense Hermitian-operator core: validated state types, spectra, norms,
// composite systems and measurements.
//
// Composite indexing is row-major: for H_A (x) H_B the basis vector
// |i_A> (x) |i_B> has index i_A * d_B + i_B.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "entropy_kit/errors.hpp"
#include "entropy_kit/tolerances.hpp"

namespace entropy_kit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Square complex matrix equal to its conjugate transpose (to kTol.hermitian,
/// relative to the largest entry). Stored exactly Hermitian after validation.
class HermitianOperator {
  public:
    explicit HermitianOperator(Matrix entries);

    static HermitianOperator identity(std::size_t d);
    static HermitianOperator diagonal(std::span<const double> diag);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Matrix& matrix() const { return entries_; }
    Complex operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  private:
    Matrix entries_;
};

/// Eigen-decomposition with eigenvalues in descending order and the matching
/// eigenvectors as columns.
struct Spectrum {
    RealVector eigenvalues;
    Matrix eigenvectors;
};

Spectrum spectral_decompose(const HermitianOperator& a);

/// Trace-one positive semidefinite operator. Eigenvalues in [-psd, rank] are
/// set to zero (and anything above 1 to 1); the clipped spectrum is cached
/// since every entropy is a spectral function.
class DensityOperator {
  public:
    explicit DensityOperator(HermitianOperator op);
    explicit DensityOperator(Matrix entries) : DensityOperator(HermitianOperator(std::move(entries))) {}

    static DensityOperator maximally_mixed(std::size_t d);
    static DensityOperator from_diagonal(std::span<const double> probs);
    static DensityOperator from_pure(const Vector& psi);

    std::size_t dim() const { return op_.dim(); }
    const HermitianOperator& op() const { return op_; }
    const Matrix& matrix() const { return op_.matrix(); }
    const Spectrum& spectrum() const { return spectrum_; }
    /// Clipped eigenvalues, descending.
    const RealVector& eigenvalues() const { return spectrum_.eigenvalues; }
    std::size_t rank(double threshold = kTol.rank) const;

  private:
    HermitianOperator op_;
    Spectrum spectrum_;
};

class ProbabilityDistribution {
  public:
    explicit ProbabilityDistribution(std::vector<double> probs);

    static ProbabilityDistribution uniform(std::size_t m);

    std::size_t size() const { return probs_.size(); }
    std::span<const double> probs() const { return probs_; }
    double operator[](std::size_t i) const { return probs_[i]; }

  private:
    std::vector<double> probs_;
};

/// m x r matrix with orthonormal columns.
class Isometry {
  public:
    explicit Isometry(Matrix entries);

    std::size_t rows() const { return static_cast<std::size_t>(entries_.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(entries_.cols()); }
    const Matrix& matrix() const { return entries_; }

  private:
    Matrix entries_;
};

/// Weighted pure states whose average is a valid density operator.
class PureStateEnsemble {
  public:
    PureStateEnsemble(ProbabilityDistribution weights, std::vector<Vector> states);

    const ProbabilityDistribution& weights() const { return weights_; }
    const std::vector<Vector>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }
    DensityOperator average() const;

  private:
    ProbabilityDistribution weights_;
    std::vector<Vector> states_;
};

/// Mutually orthogonal projectors summing to the identity.
class OrthogonalResolution {
  public:
    explicit OrthogonalResolution(std::vector<HermitianOperator> projectors);

    /// Rank-one projectors onto the computational basis.
    static OrthogonalResolution computational_basis(std::size_t d);
    /// Block projectors V_j V_j^dagger where V_j are consecutive column
    /// blocks of `unitary` with the given sizes.
    static OrthogonalResolution from_blocks(const Matrix& unitary, std::span<const std::size_t> ranks);

    std::size_t dim() const { return projectors_.front().dim(); }
    std::size_t size() const { return projectors_.size(); }
    const std::vector<HermitianOperator>& projectors() const { return projectors_; }

  private:
    std::vector<HermitianOperator> projectors_;
};

/// Measurement operators M_i with sum M_i^dagger M_i = I.
class GeneralizedMeasurement {
  public:
    explicit GeneralizedMeasurement(std::vector<Matrix> operators);

    static GeneralizedMeasurement from_resolution(const OrthogonalResolution& r);

    std::size_t dim() const { return static_cast<std::size_t>(operators_.front().rows()); }
    const std::vector<Matrix>& operators() const { return operators_; }

  private:
    std::vector<Matrix> operators_;
};

class BipartiteState {
  public:
    BipartiteState(DensityOperator rho_ab, std::size_t dim_a, std::size_t dim_b);

    const DensityOperator& rho_ab() const { return rho_ab_; }
    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }

  private:
    DensityOperator rho_ab_;
    std::size_t dim_a_;
    std::size_t dim_b_;
};

enum class Subsystem { A, B };

double schatten_norm(const HermitianOperator& a, double q);
double schatten_norm(const DensityOperator& rho, double q);
/// Ky Fan k-norm of a real vector (absolute values sorted descending).
double kyfan_norm(std::span<const double> x, std::size_t k);
double kyfan_norm(const HermitianOperator& a, std::size_t k);
double trace_distance(const DensityOperator& a, const DensityOperator& b);
/// sum_j lambda_j^q over the clipped spectrum, with 0^q = 0.
double trace_power(const DensityOperator& rho, double q);

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
DensityOperator partial_trace(const BipartiteState& s, Subsystem keep);
/// |Psi> = sum_j sqrt(lambda_j) |phi_j> (x) |j> in C^{d*d}.
Vector purify(const DensityOperator& rho);

HermitianOperator pinch(const HermitianOperator& a, const OrthogonalResolution& r);
DensityOperator pinch(const DensityOperator& rho, const OrthogonalResolution& r);
DensityOperator apply_generalized(const DensityOperator& rho, const GeneralizedMeasurement& m);

/// U rho U^dagger for a square unitary U.
DensityOperator conjugate(const DensityOperator& rho, const Isometry& u);
/// Ensemble {p_i, psi_i} with sqrt(p_i) psi_i = sum_j u_ij sqrt(lambda_j) phi_j
/// over the nonzero eigenpairs of rho; members with p_i below
/// kTol.ensemble_drop are discarded. `u` must have rank(rho) columns.
PureStateEnsemble ensemble_from_isometry(const DensityOperator& rho, const Isometry& u);

}  // namespace entropy_kit
