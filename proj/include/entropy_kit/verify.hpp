#pragma once

// Seeded randomized verification of the entropy inequalities, analytic
// stability examples, and counterexample search for subadditivity.
//
// Every check samples instances from a per-trial stream
// Rng(mix_seed(seed, trial)), so reports do not depend on how trials are
// scheduled across threads. A report counts comparisons: one comparison is
// one (instance, inequality, grid point) triple.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entropy_kit/entropies.hpp"
#include "entropy_kit/linops.hpp"

namespace entropy_kit {

struct GridPoint {
    double q;
    double s;
};

struct CheckReport {
    std::string check_name;
    std::size_t trials = 0;    // comparisons evaluated
    std::size_t skipped = 0;   // comparisons outside a bound's validity window
    std::size_t failures = 0;  // comparisons violated beyond tol_check
    /// Largest signed lhs - rhs over all comparisons; empty when none ran.
    std::optional<double> max_violation;
    nlohmann::json worst_case = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::vector<GridPoint> params_grid;

    nlohmann::json to_json() const;
};

/// Inputs shared by the randomized checks. Empty grids mean "use the default
/// grid of that check".
struct CheckConfig {
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::vector<std::size_t> dims;
    std::vector<GridPoint> params;
    std::vector<double> q_grid;
    std::size_t max_members = 8;  // ensemble check: m ranges over [rank, max_members]
    /// Negative control: assert the opposite direction of every inequality.
    bool reversed = false;
};

/// Accumulates comparisons lhs <= rhs with slack tol_check * (1 + scale).
class Tally {
  public:
    explicit Tally(bool reversed = false) : reversed_(reversed) {}

    template <class Describe>
    void less_equal(double lhs, double rhs, Describe&& describe) {
        if (reversed_) std::swap(lhs, rhs);
        record(lhs, rhs, lhs - rhs > slack(lhs, rhs), describe);
    }

    /// lhs < rhs by more than the slack.
    template <class Describe>
    void strictly_less(double lhs, double rhs, Describe&& describe) {
        if (reversed_) std::swap(lhs, rhs);
        record(lhs, rhs, lhs - rhs > -slack(lhs, rhs), describe);
    }

    void skip(std::size_t n = 1) { skipped_ += n; }
    /// Appends the tally of a later block of trials.
    void merge(const Tally& later);
    CheckReport finish(std::string name, std::uint64_t seed, std::vector<GridPoint> grid) const;

    std::size_t failures() const { return failures_; }

  private:
    static double slack(double lhs, double rhs);

    template <class Describe>
    void record(double lhs, double rhs, bool failed, Describe& describe) {
        ++trials_;
        if (failed) ++failures_;
        const double v = lhs - rhs;
        if (!max_violation_ || v > *max_violation_) {
            max_violation_ = v;
            worst_ = describe();
            worst_["lhs"] = lhs;
            worst_["rhs"] = rhs;
        }
    }

    bool reversed_;
    std::size_t trials_ = 0;
    std::size_t skipped_ = 0;
    std::size_t failures_ = 0;
    std::optional<double> max_violation_;
    nlohmann::json worst_ = nlohmann::json::object();
};

// Default grids.
std::vector<GridPoint> default_ensemble_grid();
std::vector<GridPoint> default_mixing_grid();
std::vector<GridPoint> default_fannes_grid();
std::vector<GridPoint> default_subadditivity_grid();
std::vector<GridPoint> default_projective_grid();
std::vector<GridPoint> default_qubit_grid();
std::vector<double> default_audenaert_q_grid();
std::vector<double> default_pinching_q_grid();

/// E(rho) <= E(P) for pure-state ensembles P of rho.
CheckReport check_ensemble_bound(const CheckConfig& cfg);
/// sum p_i E(omega_i) <= E(sum p_i omega_i) for 0 < q < 1, s <= 1.
CheckReport check_mixing_bound(const CheckConfig& cfg);
/// |x^s - y^s| vs s |x - y| in the four regimes, and |ln x - ln y| <= |x - y|.
CheckReport check_scalar_lemma(const CheckConfig& cfg);
/// |E(rho) - E(omega)| <= unified_fannes_bound.
CheckReport check_fannes(const CheckConfig& cfg);
/// ||rho_A||_q + ||rho_B||_q <= 1 + ||rho_AB||_q (and the Ky Fan k = 1 half).
CheckReport check_audenaert(const CheckConfig& cfg);
/// E(rho_AB) <= E(rho_A) + E(rho_B) for q > 1, s >= 1/q.
CheckReport check_subadditivity(const CheckConfig& cfg);
/// |E(rho_A) - E(rho_B)| <= E(rho_AB) plus purification identities.
CheckReport check_triangle(const CheckConfig& cfg);
/// tr(pinched^q) >= tr(rho^q) for q < 1 and <= for q > 1.
CheckReport check_pinching_traces(const CheckConfig& cfg);
/// E(pinch(rho)) >= E(rho).
CheckReport check_projective_nondecrease(const CheckConfig& cfg);

enum class ViolationRegion {
    HighQNegativeS,  // q > 1, s < 0
    LowQPositiveS,   // 0 < q < 1, s > 0
};

std::vector<GridPoint> default_violation_grid(ViolationRegion region);
/// Searches for E(rho_AB) > E(rho_A) + E(rho_B). Here `failures` counts the
/// violations found; maximally mixed products are evaluated before the
/// random search.
CheckReport search_subadditivity_violation(ViolationRegion region, const CheckConfig& cfg);
/// E(rho_AB) - E(rho_A) - E(rho_B).
double subadditivity_gap(const BipartiteState& s, const UnifiedParams& params);

/// Measurement M0 = |0><0|, M1 = |0><1|.
GeneralizedMeasurement qubit_decreasing_measurement();
/// Strict E(measured) < E(rho) for an impure diagonal qubit state.
CheckReport qubit_measurement_decrease(const DensityOperator& rho_diag, std::vector<GridPoint> grid = {},
                                       bool reversed = false);

enum class StabilityVariant { Example0, Example1 };

/// Commuting state pairs
///   example0: diag(1, 0, ..., 0) vs diag(1 - eps, eps/(d-1), ...)
///   example1: diag(0, 1/(d-1), ...) vs diag(eps, (1 - eps)/(d-1), ...)
/// at trace distance eps.
struct StabilityExample {
    StabilityVariant variant;
    double eps;
    std::uint64_t d;
    double q;
    double s;

    StabilityExample(StabilityVariant variant, double eps, std::uint64_t d, double q, double s);
};

/// |E(rho) - E(omega)| / max_unified from closed forms; no d x d matrices.
double stability_ratio(const StabilityExample& ex);
/// Dense pair (rho, omega) for small d.
std::pair<DensityOperator, DensityOperator> stability_states(const StabilityExample& ex);

/// Names accepted by run_check, in the order `all` runs them.
const std::vector<std::string>& check_names();
/// Runs a named suite (or "all"); subadd-violation yields two reports.
std::vector<CheckReport> run_check(const std::string& name, const CheckConfig& cfg);
/// Whether a report meets its expected outcome: zero failures, or for the
/// violation search at least one violation.
bool report_ok(const CheckReport& r);
/// Every inequality check with reversed = true.
std::vector<CheckReport> run_negative_controls(std::size_t trials, std::uint64_t seed);

}  // namespace entropy_kit
