#include <cmath>
#include <limits>
#include <string>

#include "entropy_kit/bounds.hpp"
#include "trials.hpp"

namespace entropy_kit {

using detail::instance;
using detail::pick;
using detail::run_trials;
using detail::trial_rng;

namespace {

template <class Pred>
std::vector<GridPoint> checked_grid(const std::vector<GridPoint>& given, std::vector<GridPoint> fallback,
                                    const char* check, const char* range, Pred ok) {
    auto grid = given.empty() ? std::move(fallback) : given;
    for (const auto& g : grid) {
        if (!(g.q > 0.0) || !ok(g)) {
            throw InvalidIndex(std::string(check) + ": (q=" + std::to_string(g.q) + ", s=" + std::to_string(g.s) +
                               ") outside " + range);
        }
    }
    return grid;
}

std::vector<UnifiedParams> to_params(const std::vector<GridPoint>& grid) {
    std::vector<UnifiedParams> out;
    out.reserve(grid.size());
    for (const auto& g : grid) out.emplace_back(g.q, g.s);
    return out;
}

std::vector<std::size_t> dims_or(const std::vector<std::size_t>& given, std::vector<std::size_t> fallback,
                                 std::size_t min_dim) {
    auto dims = given.empty() ? std::move(fallback) : given;
    for (auto d : dims) {
        if (d < min_dim) throw InvalidIndex("dimension " + std::to_string(d) + " below " + std::to_string(min_dim));
    }
    return dims;
}

std::vector<GridPoint> q_only(const std::vector<double>& qs) {
    std::vector<GridPoint> g;
    for (double q : qs) g.push_back({q, std::numeric_limits<double>::quiet_NaN()});
    return g;
}

bool subadditive_range(const GridPoint& g) { return g.q > 1.0 && g.s >= 1.0 / g.q - 1e-12; }

}  // namespace

CheckReport check_ensemble_bound(const CheckConfig& cfg) {
    const auto grid = checked_grid(cfg.params, default_ensemble_grid(), "ensemble",
                                   "q > 0 with s != 0, or 0 < q < 1 with s = 0",
                                   [](const GridPoint& g) { return g.s != 0.0 || g.q < 1.0; });
    const auto params = to_params(grid);
    const auto dims = dims_or(cfg.dims, {2, 3, 4, 5}, 1);
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const auto rho = detail::random_state_any_rank(pick(dims, rng), rng);
        const std::size_t r = rho.rank();
        // Every tenth trial uses the eigen-ensemble itself.
        const Isometry u = (k % 10 == 0)
                               ? Isometry(Matrix::Identity(r, r))
                               : random_isometry(rng.index(r, std::max(r, cfg.max_members)), r, rng);
        const auto ens = ensemble_from_isometry(rho, u);

        // Weights from the unistochastic matrix |u_ij|^2 acting on the spectrum.
        std::vector<double> direct;
        for (Eigen::Index i = 0; i < u.matrix().rows(); ++i) {
            double p = 0.0;
            for (Eigen::Index j = 0; j < u.matrix().cols(); ++j) p += std::norm(u.matrix()(i, j)) * rho.eigenvalues()(j);
            if (p >= kTol.ensemble_drop) direct.push_back(p);
        }
        double weight_err = direct.size() == ens.size() ? 0.0 : 1.0;
        for (std::size_t i = 0; weight_err < 1.0 && i < direct.size(); ++i) {
            weight_err = std::max(weight_err, std::abs(direct[i] - ens.weights()[i]));
        }
        t.less_equal(weight_err, 0.0, [&] {
            return nlohmann::json{{"trial", k}, {"what", "unistochastic weights"}, {"members", ens.size()}};
        });

        for (std::size_t g = 0; g < params.size(); ++g) {
            const double lhs = unified_quantum(rho, params[g]);
            const double rhs = unified_classical(ens.weights(), params[g]);
            t.less_equal(lhs, rhs, [&] {
                auto j = instance(k, grid[g], rho);
                j["weights"] = std::vector<double>(ens.weights().probs().begin(), ens.weights().probs().end());
                return j;
            });
        }
    });
    return tally.finish("ensemble", cfg.seed, grid);
}

CheckReport check_mixing_bound(const CheckConfig& cfg) {
    const auto grid = checked_grid(cfg.params, default_mixing_grid(), "mixing", "0 < q < 1, s <= 1",
                                   [](const GridPoint& g) { return g.q < 1.0 && g.s <= 1.0; });
    const auto params = to_params(grid);
    const auto dims = dims_or(cfg.dims, {2, 3, 4, 5}, 1);
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const std::size_t d = pick(dims, rng);
        const std::size_t n = rng.index(1, 4);
        const auto weights = random_distribution(n, rng);
        std::vector<DensityOperator> parts;
        for (std::size_t i = 0; i < n; ++i) {
            if (k % 10 == 0 && i > 0) {
                parts.push_back(parts.front());
            } else {
                parts.push_back(detail::random_state_any_rank(d, rng));
            }
        }
        Matrix mix = Matrix::Zero(d, d);
        for (std::size_t i = 0; i < n; ++i) mix += weights[i] * parts[i].matrix();
        const DensityOperator rho(std::move(mix));

        for (std::size_t g = 0; g < params.size(); ++g) {
            double lhs = 0.0;
            for (std::size_t i = 0; i < n; ++i) lhs += weights[i] * unified_quantum(parts[i], params[g]);
            const double rhs = unified_quantum(rho, params[g]);
            t.less_equal(lhs, rhs, [&] {
                auto j = instance(k, grid[g], rho);
                j["components"] = n;
                return j;
            });
        }
    });
    return tally.finish("mixing", cfg.seed, grid);
}

CheckReport check_scalar_lemma(const CheckConfig& cfg) {
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        auto describe = [&](const char* regime, double x, double y, double s) {
            return [=] { return nlohmann::json{{"trial", k}, {"regime", regime}, {"x", x}, {"y", y}, {"s", s}}; };
        };
        auto power_gap = [](double x, double y, double s) { return std::abs(std::pow(x, s) - std::pow(y, s)); };
        {
            // s >= 1, x, y in [0, 1]
            const double s = rng.uniform(1.0, 5.0), x = rng.uniform(), y = rng.uniform();
            t.less_equal(power_gap(x, y, s), s * std::abs(x - y), describe("s>=1, x,y in [0,1]", x, y, s));
        }
        {
            // 0 < s <= 1, x, y >= 1
            const double s = rng.uniform(), x = rng.uniform(1.0, 10.0), y = rng.uniform(1.0, 10.0);
            t.less_equal(power_gap(x, y, s), s * std::abs(x - y), describe("0<s<=1, x,y >= 1", x, y, s));
        }
        {
            // 0 < s <= 1, x, y in [0, 1]: reversed
            const double s = rng.uniform(), x = rng.uniform(), y = rng.uniform();
            t.less_equal(s * std::abs(x - y), power_gap(x, y, s), describe("0<s<=1, x,y in [0,1]", x, y, s));
        }
        {
            // s >= 1, x, y >= 1: reversed
            const double s = rng.uniform(1.0, 5.0), x = rng.uniform(1.0, 10.0), y = rng.uniform(1.0, 10.0);
            t.less_equal(s * std::abs(x - y), power_gap(x, y, s), describe("s>=1, x,y >= 1", x, y, s));
        }
        {
            const double x = rng.uniform(1.0, 10.0), y = rng.uniform(1.0, 10.0);
            t.less_equal(std::abs(std::log(x) - std::log(y)), std::abs(x - y), describe("log, x,y >= 1", x, y, 0.0));
        }
    });
    return tally.finish("scalar-lemma", cfg.seed, {});
}

namespace {

/// Second state at a spread of trace distances from rho.
DensityOperator fannes_partner(const DensityOperator& rho, Rng& rng) {
    const std::size_t d = rho.dim();
    switch (rng.index(0, 3)) {
        case 0:
            return detail::random_state_any_rank(d, rng);
        case 1: {
            const double t = std::pow(10.0, rng.uniform(-3.0, 0.0));
            const auto sigma = detail::random_state_any_rank(d, rng);
            return DensityOperator(Matrix((1.0 - t) * rho.matrix() + t * sigma.matrix()));
        }
        case 2: {
            const Matrix u = detail::unitary_exp(detail::random_hermitian(d, rng), std::pow(10.0, rng.uniform(-3.0, 0.0)));
            return DensityOperator(Matrix(u * rho.matrix() * u.adjoint()));
        }
        default: {
            // Same spectrum as rho with eps weight spread over the rest.
            const double eps = rng.uniform(0.0, 1.0);
            std::vector<double> diag(d, eps / static_cast<double>(d - 1));
            diag[0] = 1.0 - eps;
            const Isometry basis(rho.spectrum().eigenvectors);
            return conjugate(DensityOperator::from_diagonal(diag), basis);
        }
    }
}

}  // namespace

CheckReport check_fannes(const CheckConfig& cfg) {
    const auto grid = checked_grid(cfg.params, default_fannes_grid(), "fannes",
                                   "0<q<1 with s in (-inf,-1] u [0,1], or q>1 with s in [-1,0] u [1,inf)",
                                   [](const GridPoint& g) { return fannes_range(g.q, g.s) != FannesRange::None; });
    const auto params = to_params(grid);
    const auto dims = dims_or(cfg.dims, {2, 3, 4, 5, 6}, 2);
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const std::size_t d = pick(dims, rng);
        // rho = |0><0| in a random basis when the partner is the spread-out
        // state; that pair saturates the q > 1 Tsallis bound.
        const auto rho = (k % 10 == 0) ? random_density(d, 1, rng) : detail::random_state_any_rank(d, rng);
        const auto omega = (k % 10 == 0) ? [&] {
            const double eps = rng.uniform(0.0, 1.0);
            std::vector<double> diag(d, eps / static_cast<double>(d - 1));
            diag[0] = 1.0 - eps;
            return conjugate(DensityOperator::from_diagonal(diag), Isometry(rho.spectrum().eigenvectors));
        }()
                                         : fannes_partner(rho, rng);
        const double eps = std::min(1.0, trace_distance(rho, omega));
        for (std::size_t g = 0; g < params.size(); ++g) {
            double bound = 0.0;
            try {
                bound = unified_fannes_bound(BoundSpec(grid[g].q, grid[g].s, d, eps));
            } catch (const OutOfValidity&) {
                t.skip();
                continue;
            }
            const double lhs = std::abs(unified_quantum(rho, params[g]) - unified_quantum(omega, params[g]));
            t.less_equal(lhs, bound, [&] {
                auto j = instance(k, grid[g], rho);
                j["omega"] = matrix_to_json(omega.matrix());
                j["eps"] = eps;
                return j;
            });
        }
    });
    return tally.finish("fannes", cfg.seed, grid);
}

CheckReport check_audenaert(const CheckConfig& cfg) {
    const auto qs = cfg.q_grid.empty() ? default_audenaert_q_grid() : cfg.q_grid;
    for (double q : qs) {
        if (!(q > 1.0)) throw InvalidIndex("audenaert: needs q > 1, got " + std::to_string(q));
    }
    const auto dims = dims_or(cfg.dims, {2, 3}, 1);
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const std::size_t da = pick(dims, rng), db = pick(dims, rng);
        const BipartiteState st(detail::random_bipartite(da, db, rng), da, db);
        const auto rho_a = partial_trace(st, Subsystem::A);
        const auto rho_b = partial_trace(st, Subsystem::B);
        for (double q : qs) {
            const double x[2] = {schatten_norm(rho_a, q), schatten_norm(rho_b, q)};
            const double z[2] = {1.0, schatten_norm(st.rho_ab(), q)};
            for (std::size_t kf = 1; kf <= 2; ++kf) {
                t.less_equal(kyfan_norm(x, kf), kyfan_norm(z, kf), [&] {
                    auto j = instance(k, {q, std::numeric_limits<double>::quiet_NaN()}, st.rho_ab());
                    j["dim_a"] = da;
                    j["dim_b"] = db;
                    j["ky_fan_k"] = kf;
                    return j;
                });
            }
        }
    });
    return tally.finish("audenaert", cfg.seed, q_only(qs));
}

CheckReport check_subadditivity(const CheckConfig& cfg) {
    const auto grid =
        checked_grid(cfg.params, default_subadditivity_grid(), "subadd", "q > 1, s >= 1/q", subadditive_range);
    const auto params = to_params(grid);
    const auto dims = dims_or(cfg.dims, {2, 3}, 1);
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const std::size_t da = pick(dims, rng), db = pick(dims, rng);
        const BipartiteState st(detail::random_bipartite(da, db, rng), da, db);
        const auto rho_a = partial_trace(st, Subsystem::A);
        const auto rho_b = partial_trace(st, Subsystem::B);
        for (std::size_t g = 0; g < params.size(); ++g) {
            const double lhs = unified_quantum(st.rho_ab(), params[g]);
            const double rhs = unified_quantum(rho_a, params[g]) + unified_quantum(rho_b, params[g]);
            t.less_equal(lhs, rhs, [&] {
                auto j = instance(k, grid[g], st.rho_ab());
                j["dim_a"] = da;
                j["dim_b"] = db;
                return j;
            });
        }
    });
    return tally.finish("subadd", cfg.seed, grid);
}

double subadditivity_gap(const BipartiteState& s, const UnifiedParams& params) {
    return unified_quantum(s.rho_ab(), params) - unified_quantum(partial_trace(s, Subsystem::A), params) -
           unified_quantum(partial_trace(s, Subsystem::B), params);
}

CheckReport search_subadditivity_violation(ViolationRegion region, const CheckConfig& cfg) {
    const bool high = region == ViolationRegion::HighQNegativeS;
    const auto grid = checked_grid(
        cfg.params, default_violation_grid(region), "subadd-violation", high ? "q > 1, s < 0" : "0 < q < 1, s > 0",
        [&](const GridPoint& g) { return high ? (g.q > 1.0 && g.s < 0.0) : (g.q < 1.0 && g.s > 0.0); });
    const auto params = to_params(grid);
    const auto dims = dims_or(cfg.dims, {2, 3}, 1);

    auto evaluate = [&](Tally& t, const BipartiteState& st, std::size_t g, nlohmann::json tag) {
        const double e_ab = unified_quantum(st.rho_ab(), params[g]);
        const double e_sum = unified_quantum(partial_trace(st, Subsystem::A), params[g]) +
                             unified_quantum(partial_trace(st, Subsystem::B), params[g]);
        t.less_equal(e_ab, e_sum, [&] {
            auto j = std::move(tag);
            j["q"] = grid[g].q;
            j["s"] = grid[g].s;
            j["dim_a"] = st.dim_a();
            j["dim_b"] = st.dim_b();
            j["rho_ab"] = matrix_to_json(st.rho_ab().matrix());
            return j;
        });
    };

    // Maximally mixed products first: their gaps are known in closed form.
    Tally seeded;
    for (std::size_t g = 0; g < params.size(); ++g) {
        for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
            const BipartiteState st(DensityOperator::maximally_mixed(da * db), da, db);
            evaluate(seeded, st, g, {{"instance", "maximally mixed product"}});
        }
    }
    const auto random = run_trials(cfg.trials, false, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const std::size_t da = pick(dims, rng), db = pick(dims, rng);
        const BipartiteState st(detail::random_bipartite(da, db, rng), da, db);
        for (std::size_t g = 0; g < params.size(); ++g) evaluate(t, st, g, {{"instance", "random"}, {"trial", k}});
    });
    seeded.merge(random);
    return seeded.finish(high ? "subadd-violation/q>1,s<0" : "subadd-violation/0<q<1,s>0", cfg.seed, grid);
}

CheckReport check_triangle(const CheckConfig& cfg) {
    const auto grid =
        checked_grid(cfg.params, default_subadditivity_grid(), "triangle", "q > 1, s >= 1/q", subadditive_range);
    const auto params = to_params(grid);
    const auto dims = dims_or(cfg.dims, {2, 3}, 1);
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const std::size_t da = pick(dims, rng), db = pick(dims, rng);
        const std::size_t dab = da * db;
        const BipartiteState st(detail::random_bipartite(da, db, rng), da, db);
        const auto rho_a = partial_trace(st, Subsystem::A);
        const auto rho_b = partial_trace(st, Subsystem::B);

        // Purification on AB (x) C with dim C = dim AB.
        const auto abc = DensityOperator::from_pure(purify(st.rho_ab()));
        const auto rho_c = partial_trace(BipartiteState(abc, dab, dab), Subsystem::B);
        const auto rho_ab_back = partial_trace(BipartiteState(abc, dab, dab), Subsystem::A);
        const auto rho_bc = partial_trace(BipartiteState(abc, da, db * dab), Subsystem::B);
        auto describe = [&](std::size_t g, const char* what) {
            return [&, g, what] {
                auto j = instance(k, grid[g], st.rho_ab());
                j["dim_a"] = da;
                j["dim_b"] = db;
                j["what"] = what;
                return j;
            };
        };
        t.less_equal((rho_ab_back.matrix() - st.rho_ab().matrix()).cwiseAbs().maxCoeff(), 0.0,
                     describe(0, "purification reproduces rho_AB"));
        for (std::size_t g = 0; g < params.size(); ++g) {
            const double e_a = unified_quantum(rho_a, params[g]);
            const double e_b = unified_quantum(rho_b, params[g]);
            const double e_ab = unified_quantum(st.rho_ab(), params[g]);
            t.less_equal(std::abs(e_a - e_b), e_ab, describe(g, "triangle"));
            t.less_equal(std::abs(e_ab - unified_quantum(rho_c, params[g])), 0.0, describe(g, "E(AB) = E(C)"));
            t.less_equal(std::abs(e_a - unified_quantum(rho_bc, params[g])), 0.0, describe(g, "E(A) = E(BC)"));
        }
    });
    return tally.finish("triangle", cfg.seed, grid);
}

namespace {

/// Resolution and state for pinching trials: every tenth trial pinches with
/// {I}, the next one a diagonal state in the computational basis (both
/// equality cases), the rest draw a random resolution.
std::pair<DensityOperator, OrthogonalResolution> pinching_instance(std::size_t k, std::size_t d, Rng& rng) {
    if (k % 10 == 0) {
        return {detail::random_state_any_rank(d, rng), OrthogonalResolution({HermitianOperator::identity(d)})};
    }
    if (k % 10 == 1) {
        const auto p = random_distribution(d, rng);
        return {DensityOperator::from_diagonal(p.probs()), OrthogonalResolution::computational_basis(d)};
    }
    auto rho = detail::random_state_any_rank(d, rng);
    return {std::move(rho), random_resolution(d, rng)};
}

}  // namespace

CheckReport check_pinching_traces(const CheckConfig& cfg) {
    const auto qs = cfg.q_grid.empty() ? default_pinching_q_grid() : cfg.q_grid;
    for (double q : qs) {
        if (!(q > 0.0)) throw InvalidIndex("pinching: needs q > 0, got " + std::to_string(q));
    }
    const auto dims = dims_or(cfg.dims, {3, 4, 5, 6}, 2);
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const std::size_t d = pick(dims, rng);
        const auto [rho, res] = pinching_instance(k, d, rng);
        const auto pinched = pinch(rho, res);
        for (double q : qs) {
            const double before = trace_power(rho, q);
            const double after = trace_power(pinched, q);
            auto describe = [&, q](const char* what) {
                return [&, q, what] {
                    auto j = instance(k, {q, std::numeric_limits<double>::quiet_NaN()}, rho);
                    j["block_ranks"] = [&] {
                        std::vector<long> ranks;
                        for (const auto& n : res.projectors()) ranks.push_back(std::lround(n.matrix().trace().real()));
                        return ranks;
                    }();
                    j["what"] = what;
                    return j;
                };
            };
            if (q < 1.0) {
                t.less_equal(before, after, describe("tr rho^q <= tr pinched^q"));
            } else if (q > 1.0) {
                t.less_equal(after, before, describe("tr pinched^q <= tr rho^q"));
                t.less_equal(schatten_norm(pinched, q), schatten_norm(rho, q), describe("Schatten norm"));
            } else {
                t.less_equal(std::abs(after - before), 0.0, describe("trace preserved"));
            }
        }
    });
    return tally.finish("pinching", cfg.seed, q_only(qs));
}

CheckReport check_projective_nondecrease(const CheckConfig& cfg) {
    const auto grid = checked_grid(cfg.params, default_projective_grid(), "projective", "q > 0",
                                   [](const GridPoint&) { return true; });
    const auto params = to_params(grid);
    const auto dims = dims_or(cfg.dims, {2, 3, 4, 5, 6}, 2);
    const auto tally = run_trials(cfg.trials, cfg.reversed, [&](std::size_t k, Tally& t) {
        Rng rng = trial_rng(cfg.seed, k);
        const std::size_t d = pick(dims, rng);
        auto [rho, res] = pinching_instance(k, d, rng);
        if (k % 10 == 2) rho = DensityOperator::maximally_mixed(d);
        const auto pinched = pinch(rho, res);
        for (std::size_t g = 0; g < params.size(); ++g) {
            t.less_equal(unified_quantum(rho, params[g]), unified_quantum(pinched, params[g]),
                         [&] { return instance(k, grid[g], rho); });
        }
    });
    return tally.finish("projective", cfg.seed, grid);
}

GeneralizedMeasurement qubit_decreasing_measurement() {
    Matrix m0 = Matrix::Zero(2, 2);
    Matrix m1 = Matrix::Zero(2, 2);
    m0(0, 0) = 1.0;
    m1(0, 1) = 1.0;
    return GeneralizedMeasurement({m0, m1});
}

CheckReport qubit_measurement_decrease(const DensityOperator& rho_diag, std::vector<GridPoint> grid, bool reversed) {
    if (rho_diag.dim() != 2) throw DimMismatch("qubit measurement needs a 2x2 state");
    if (std::abs(rho_diag.matrix()(0, 1)) > kTol.hermitian) {
        throw NotDiagonal("state must be diagonal in the measurement basis");
    }
    if (rho_diag.eigenvalues()(0) >= 1.0 - kTol.rank) throw PureState("state must be impure");
    grid = checked_grid(grid, default_qubit_grid(), "qubit-measure", "q > 0", [](const GridPoint&) { return true; });
    const auto measured = apply_generalized(rho_diag, qubit_decreasing_measurement());
    Tally t(reversed);
    for (const auto& g : grid) {
        const UnifiedParams p(g.q, g.s);
        t.strictly_less(unified_quantum(measured, p), unified_quantum(rho_diag, p), [&] {
            auto j = instance(0, g, rho_diag);
            j["measured"] = matrix_to_json(measured.matrix());
            return j;
        });
    }
    return t.finish("qubit-measure", 0, grid);
}

}  // namespace entropy_kit
