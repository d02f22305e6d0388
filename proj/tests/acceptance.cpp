// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "entropy_kit/bounds.hpp"
#include "entropy_kit/cli.hpp"
#include "entropy_kit/entropies.hpp"
#include "entropy_kit/random.hpp"
#include "entropy_kit/verify.hpp"
#include "oracles.hpp"

using namespace entropy_kit;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double x) { return cli::format_number(x); }

Outcome theorem_suites() {
    CheckConfig cfg;
    cfg.trials = 1000;
    cfg.seed = 42;
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = run_check("all", cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::vector<std::string> required = {"ensemble", "mixing",   "scalar-lemma", "fannes",    "audenaert",
                                               "subadd",   "triangle", "pinching",     "projective"};
    bool ok = secs < 300.0;
    std::size_t comparisons = 0;
    std::string bad;
    for (const auto& name : required) {
        bool seen = false;
        for (const auto& r : reports) {
            if (r.check_name != name) continue;
            seen = true;
            comparisons += r.trials;
            if (r.failures != 0 || r.trials == 0) {
                ok = false;
                bad += " " + name + "(" + std::to_string(r.failures) + ")";
            }
        }
        ok = ok && seen;
    }
    return {ok, std::to_string(comparisons) + " comparisons, failures:" + (bad.empty() ? " none" : bad) + ", " +
                    fmt(secs) + " s"};
}

Outcome saturation() {
    const StabilityExample ex(StabilityVariant::Example0, 0.1, 4, 2.0, 1.0);
    const auto [rho, omega] = stability_states(ex);
    const double diff = std::abs(quantum_tsallis(rho, 2.0) - quantum_tsallis(omega, 2.0));
    const double bound = fannes_tsallis_high_q({2.0, 1.0, 4, 0.1});
    const double closed = 0.01 * oracle::q_log(3.0, 2.0) + (1.0 - 0.01 - 0.81) / 1.0;
    const bool ok = std::abs(diff - bound) <= 1e-10 && std::abs(bound - closed) <= 1e-12 &&
                    std::abs(bound - 0.186667) < 5e-7;
    return {ok, "|H(rho0)-H(omega0)| = " + fmt(diff) + ", bound = " + fmt(bound)};
}

Outcome maximum_attained() {
    double worst = 0.0;
    std::size_t n = 0;
    for (std::uint64_t d = 2; d <= 8; ++d)
        for (double q : {0.3, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0})
            for (double s : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
                const double e = unified_quantum(DensityOperator::maximally_mixed(d), {q, s});
                worst = std::max(worst, std::abs(e - max_unified(q, s, d)));
                if (s == 0.0) worst = std::max(worst, std::abs(max_unified(q, s, d) - std::log(double(d))));
                ++n;
            }
    return {worst <= 1e-10, std::to_string(n) + " (d, q, s) points, max deviation " + fmt(worst)};
}

Outcome stability_violation() {
    bool ok = true;
    std::string detail = "example0:";
    double prev = 0.0;
    for (double d : {10.0, 1e3, 1e6, 1e8}) {
        const double r = stability_ratio({StabilityVariant::Example0, 0.01, std::uint64_t(d), 0.5, -1.0});
        ok = ok && r > prev;
        prev = r;
        detail += " " + fmt(r);
    }
    ok = ok && prev > 0.99;
    detail += "; example1:";
    prev = 0.0;
    for (double d : {1e2, 1e4, 1e6}) {
        const double r = stability_ratio({StabilityVariant::Example1, 0.1, std::uint64_t(d), 2.0, -1.0});
        ok = ok && r > prev;
        prev = r;
        detail += " " + fmt(r);
    }
    ok = ok && prev > 0.95;
    return {ok, detail};
}

Outcome thermodynamic_stability() {
    const double q = 2.0, s = 1.0;
    bool ok = true;
    double worst = -INFINITY;
    Rng rng(2024);
    for (double eps : {0.01, 0.05, 0.1}) {
        const double cap = s * q * eps + 1e-8;
        const double limit = thermodynamic_limit_ratio(q, s, eps);
        ok = ok && limit <= cap;
        worst = std::max(worst, limit - s * q * eps);
        for (std::uint64_t d : {10000ull, 1000000ull, 100000000ull}) {
            const double f = stability_ratio_bound({q, s, d, eps});
            ok = ok && f <= cap;
            worst = std::max(worst, f - s * q * eps);
        }
        // Random commuting pairs at trace distance eps in d = 10^4.
        const std::uint64_t d = 10000;
        for (int k = 0; k < 20; ++k) {
            const auto p = random_distribution(d, rng);
            const auto r = random_distribution(d, rng);
            double tv = 0.0;
            for (std::size_t i = 0; i < d; ++i) tv += 0.5 * std::abs(p[i] - r[i]);
            const double lam = eps / tv;
            if (lam > 1.0) continue;
            std::vector<double> w(d);
            double total = 0.0;
            for (std::size_t i = 0; i < d; ++i) total += (w[i] = (1.0 - lam) * p[i] + lam * r[i]);
            for (auto& x : w) x /= total;
            const double ratio = std::abs(unified_classical(p, {q, s}) - unified_classical(ProbabilityDistribution(w), {q, s})) /
                                 max_unified(q, s, d);
            ok = ok && ratio <= stability_ratio_bound({q, s, d, eps}) + 1e-8 && ratio <= cap;
            worst = std::max(worst, ratio - s * q * eps);
        }
    }
    return {ok, "max(ratio - s q eps) = " + fmt(worst)};
}

Outcome subadditivity_counterexamples() {
    const auto half = DensityOperator::maximally_mixed(2);
    const BipartiteState s(tensor(half, half), 2, 2);
    const double g1 = subadditivity_gap(s, {2.0, -1.0});
    const double g2 = subadditivity_gap(s, {0.5, 1.0});

    CheckConfig cfg;
    cfg.trials = 1000;
    cfg.seed = 42;
    const auto reports = run_check("subadd-violation", cfg);
    bool ok = g1 >= 1.0 - 1e-9 && g2 >= 0.34 && reports.size() == 2;
    std::string detail = "I/2 (x) I/2 gaps " + fmt(g1) + ", " + fmt(g2) + ";";
    for (const auto& r : reports) {
        ok = ok && report_ok(r) && r.max_violation.has_value();
        detail += " " + r.check_name + " found " + std::to_string(r.failures);
    }
    if (ok) ok = *reports[0].max_violation >= 1.0 - 1e-9 && *reports[1].max_violation >= 0.34;
    return {ok, detail};
}

Outcome limit_consistency() {
    Rng rng(7);
    double worst_r = 0.0, worst_h = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto p = random_distribution(2 + k % 9, rng);
        for (double q : {0.3, 0.7, 1.5, 2.0, 3.0}) {
            const double r = renyi(p, q);
            worst_r = std::max(worst_r, std::abs(unified_classical(p, {q, 1e-10}) - r) / (1e-6 * (1 + std::abs(r))));
        }
        const double h = shannon(p);
        for (double s : {-2.0, -1.0, 0.5, 1.0, 2.0})
            worst_h = std::max(worst_h, std::abs(unified_classical(p, {1.0 + 1e-8, s}) - h) / (1e-5 * (1 + h)));
    }
    return {worst_r <= 1.0 && worst_h <= 1.0,
            "worst error / tolerance: s->0 " + fmt(worst_r) + ", q->1 " + fmt(worst_h)};
}

Outcome qubit_decrease() {
    const double half[] = {0.5, 0.5};
    const auto rho = DensityOperator::from_diagonal(half);
    const auto out = apply_generalized(rho, qubit_decreasing_measurement());
    const double before = unified_quantum(rho, {2.0, 1.0});
    const double after = unified_quantum(out, {2.0, 1.0});
    const double d82[] = {0.8, 0.2};
    const auto r = qubit_measurement_decrease(DensityOperator::from_diagonal(d82));
    const bool ok = std::abs(before - 0.5) < 1e-12 && std::abs(after) < 1e-12 && r.failures == 0 &&
                    r.trials == default_qubit_grid().size();
    return {ok, "E: " + fmt(before) + " -> " + fmt(after) + "; diag(0.8, 0.2): " + std::to_string(r.trials) +
                    " grid points, " + std::to_string(r.failures) + " without strict decrease"};
}

Outcome determinism() {
    auto once = [] {
        std::ostringstream out, err;
        const int code = cli::run({"check", "all", "--seed", "42", "--json"}, out, err);
        return std::make_pair(code, out.str());
    };
    const auto a = once();
    const auto b = once();
    const bool ok = a.first == 0 && !a.second.empty() && a.second == b.second;
    return {ok, std::to_string(a.second.size()) + " bytes per run, identical: " + (a.second == b.second ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"theorem suites", theorem_suites},
        {"saturation", saturation},
        {"maximum attainment", maximum_attained},
        {"stability violation", stability_violation},
        {"thermodynamic stability", thermodynamic_stability},
        {"subadditivity counterexamples", subadditivity_counterexamples},
        {"limit consistency", limit_consistency},
        {"qubit measurement decrease", qubit_decrease},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
