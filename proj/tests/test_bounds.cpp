#include <doctest.h>

#include <cmath>

#include "entropy_kit/bounds.hpp"
#include "entropy_kit/entropies.hpp"
#include "entropy_kit/random.hpp"
#include "entropy_kit/verify.hpp"
#include "oracles.hpp"

using namespace entropy_kit;
using doctest::Approx;

TEST_CASE("eta_q") {
    CHECK(eta_q(0.0, 0.5) == 0.0);
    CHECK(eta_q(1.0, 0.5) == Approx(0.0));
    CHECK(eta_q(0.2, 0.5) == Approx((std::sqrt(0.2) - 0.2) / 0.5).epsilon(1e-12));
    CHECK(eta_q(0.2, 0.5) == Approx(0.49443).epsilon(1e-5));
    CHECK(eta_q(0.3, 1.0) == Approx(-0.3 * std::log(0.3)));
}

TEST_CASE("low-q Tsallis bound") {
    CHECK(fannes_tsallis_low_q({0.5, 0.0, 4, 0.0}) == 0.0);
    const double want = std::sqrt(0.2) * oracle::q_log(4.0, 0.5) + (std::sqrt(0.2) - 0.2) / 0.5;
    CHECK(fannes_tsallis_low_q({0.5, 0.0, 4, 0.1}) == Approx(want).epsilon(1e-12));
    CHECK(want == Approx(1.38887).epsilon(1e-5));

    // Window q^{1/(1-q)} = 0.25 at q = 0.5: eps = 0.125 is the last valid point.
    CHECK(low_q_window(0.5) == Approx(0.25));
    CHECK_NOTHROW(fannes_tsallis_low_q({0.5, 0.0, 4, 0.125}));
    CHECK_THROWS_AS(fannes_tsallis_low_q({0.5, 0.0, 4, 0.13}), OutOfValidity);
    CHECK_THROWS_AS(fannes_tsallis_low_q({2.5, 0.0, 4, 0.1}), InvalidIndex);

    for (double q : {0.3, 0.5, 0.8}) {
        double prev = 0.0;
        const double end = 0.5 * low_q_window(q);
        for (int i = 1; i <= 50; ++i) {
            const double v = fannes_tsallis_low_q({q, 0.0, 5, end * i / 50.0});
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("high-q Tsallis bound") {
    CHECK(fannes_tsallis_high_q({2.0, 1.0, 4, 0.0}) == 0.0);
    CHECK(fannes_tsallis_high_q({2.0, 1.0, 4, 0.1}) == Approx(0.01 * 2.0 / 3.0 + 0.18).epsilon(1e-12));
    CHECK(fannes_tsallis_high_q({2.0, 1.0, 4, 0.1}) == Approx(0.186667).epsilon(1e-6));
    CHECK_THROWS_AS(fannes_tsallis_high_q({0.5, 1.0, 4, 0.1}), InvalidIndex);

    // Saturated by diag(1, 0, ...) vs diag(1 - eps, eps/(d-1), ...).
    for (double q : {1.5, 2.0, 3.0})
        for (std::uint64_t d : {2u, 4u, 7u})
            for (double eps : {0.05, 0.1, 0.3}) {
                const StabilityExample ex(StabilityVariant::Example0, eps, d, q, 1.0);
                const auto [rho, omega] = stability_states(ex);
                const double diff = std::abs(quantum_tsallis(rho, q) - quantum_tsallis(omega, q));
                CHECK(diff == Approx(fannes_tsallis_high_q({q, 1.0, d, eps})).epsilon(1e-10));
            }
}

TEST_CASE("kappa and the unified bound") {
    CHECK(kappa_s(2.0, 1.0, 3) == 1.0);
    CHECK(kappa_s(2.0, 2.0, 3) == 1.0);
    CHECK(kappa_s(2.0, -1.0, 3) == Approx(9.0));
    CHECK_THROWS_AS(kappa_s(2.0, 0.5, 3), OutOfValidity);

    CHECK(unified_fannes_bound({2.0, 1.0, 4, 0.1}) == Approx(0.186667).epsilon(1e-6));
    CHECK(unified_fannes_bound({2.0, -1.0, 3, 0.1}) == Approx(1.665).epsilon(1e-12));
    for (double q : {0.5, 2.0})
        for (double s : {-1.0, 0.0, 1.0}) CHECK(unified_fannes_bound({q, s, 4, 0.0}) == 0.0);

    CHECK(fannes_range(0.5, -2.0) == FannesRange::LowQ);
    CHECK(fannes_range(0.5, 0.5) == FannesRange::LowQ);
    CHECK(fannes_range(0.5, -0.5) == FannesRange::None);
    CHECK(fannes_range(0.5, 1.5) == FannesRange::None);
    CHECK(fannes_range(2.0, -0.5) == FannesRange::HighQ);
    CHECK(fannes_range(2.0, 3.0) == FannesRange::HighQ);
    CHECK(fannes_range(2.0, 0.5) == FannesRange::None);
    CHECK(fannes_range(1.0, 1.0) == FannesRange::None);
    CHECK_THROWS_AS(unified_fannes_bound({2.0, 0.5, 4, 0.1}), OutOfValidity);
    CHECK_THROWS_AS(BoundSpec(2.0, 1.0, 1, 0.1), InvalidIndex);
    CHECK_THROWS_AS(BoundSpec(2.0, 1.0, 4, 1.5), DomainError);
}

TEST_CASE("lipschitz bound") {
    CHECK(lipschitz_bound(0.0, 2.0) == 0.0);
    CHECK(lipschitz_bound(0.1, 2.0) == Approx(0.4));
    CHECK_THROWS_AS(lipschitz_bound(0.1, 0.5), InvalidIndex);

    // Both the unified bound and the Lipschitz bound dominate random pairs
    // at trace distance <= 0.1 (q = 2, s = 1, d = 4).
    Rng rng(31);
    int tested = 0;
    while (tested < 200) {
        const auto rho = random_density(4, 4, rng);
        const auto omega = random_density(4, 4, rng);
        const double lam = rng.uniform(0.0, 1.0);
        const DensityOperator mix(Matrix((1 - lam) * rho.matrix() + lam * omega.matrix()));
        const double t = trace_distance(rho, mix);
        if (t > 0.1 || t == 0.0) continue;
        ++tested;
        const double diff = std::abs(unified_quantum(rho, {2.0, 1.0}) - unified_quantum(mix, {2.0, 1.0}));
        CHECK(diff <= unified_fannes_bound({2.0, 1.0, 4, t}) + 1e-10);
        CHECK(diff <= lipschitz_bound(t, 2.0) + 1e-10);
    }
}

TEST_CASE("maximum and normalized bound") {
    CHECK(max_unified(2.0, 1.0, 1) == 0.0);
    CHECK(max_unified(2.0, 1.0, 4) == Approx(0.75));
    CHECK(max_unified(0.5, 0.0, 4) == Approx(std::log(4.0)));
    CHECK(max_unified(1.0, 3.0, 4) == Approx(std::log(4.0)));
    for (std::uint64_t d = 2; d <= 8; ++d)
        for (double q : {0.3, 0.5, 1.0, 2.0, 3.0})
            for (double s : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0}) {
                CHECK(unified_quantum(DensityOperator::maximally_mixed(d), {q, s}) ==
                      Approx(max_unified(q, s, d)).epsilon(1e-10));
            }

    CHECK(stability_ratio_bound({2.0, 1.0, 4, 0.0}) == 0.0);
    CHECK(stability_ratio_bound({2.0, 1.0, 4, 0.1}) == Approx(0.186667 / 0.75).epsilon(1e-5));
    CHECK(stability_ratio_bound({2.0, 1.0, 4, 0.1}) == Approx(0.248889).epsilon(1e-5));
}

TEST_CASE("thermodynamic limit") {
    for (double q : {1.5, 2.0, 3.0})
        for (double s : {1.0, 2.0})
            for (double eps : {0.01, 0.05, 0.1, 0.3}) {
                const double limit = thermodynamic_limit_ratio(q, s, eps);
                CHECK(limit == Approx(s * (1 - std::pow(1 - eps, q))).epsilon(1e-12));
                CHECK(limit <= s * q * eps + 1e-12);
                double prev_gap = INFINITY;
                for (std::uint64_t d : {100ull, 10000ull, 1000000ull}) {
                    const double gap = std::abs(stability_ratio_bound({q, s, d, eps}) - limit);
                    CHECK(gap < prev_gap);
                    prev_gap = gap;
                }
                CHECK(prev_gap < 1e-3);
            }
    CHECK_THROWS_AS(thermodynamic_limit_ratio(0.5, 1.0, 0.1), OutOfValidity);
}

TEST_CASE("monotone window of the normalized bound") {
    for (double q : {0.3, 0.5, 0.7})
        for (double s : {-1.0, 0.0, 1.0}) {
            const double end = stability_monotone_limit(q, s, 10);
            double prev = 0.0;
            for (int i = 1; i <= 20; ++i) {
                const double v = stability_ratio_bound({q, s, 10, end * i / 20.0});
                CHECK(v > prev);
                prev = v;
            }
        }
}
