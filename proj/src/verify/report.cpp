#include <cmath>
#include <functional>
#include <map>

#include "trials.hpp"

namespace entropy_kit {

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["check"] = check_name;
    j["trials"] = trials;
    j["skipped"] = skipped;
    j["failures"] = failures;
    j["max_violation"] = max_violation ? nlohmann::json(*max_violation) : nlohmann::json(nullptr);
    j["worst_case"] = worst_case;
    j["seed"] = seed;
    return j;
}

double Tally::slack(double lhs, double rhs) {
    return kTol.check * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

void Tally::merge(const Tally& later) {
    trials_ += later.trials_;
    skipped_ += later.skipped_;
    failures_ += later.failures_;
    if (later.max_violation_ && (!max_violation_ || *later.max_violation_ > *max_violation_)) {
        max_violation_ = later.max_violation_;
        worst_ = later.worst_;
    }
}

CheckReport Tally::finish(std::string name, std::uint64_t seed, std::vector<GridPoint> grid) const {
    CheckReport r;
    r.check_name = std::move(name);
    r.trials = trials_;
    r.skipped = skipped_;
    r.failures = failures_;
    r.max_violation = max_violation_;
    r.worst_case = worst_;
    r.seed = seed;
    r.params_grid = std::move(grid);
    return r;
}

namespace {

std::vector<GridPoint> product(std::initializer_list<double> qs, std::initializer_list<double> ss) {
    std::vector<GridPoint> g;
    for (double q : qs)
        for (double s : ss) g.push_back({q, s});
    return g;
}

}  // namespace

std::vector<GridPoint> default_ensemble_grid() {
    std::vector<GridPoint> g;
    for (const auto& p : product({0.3, 0.7, 1.5, 2.0, 3.0}, {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0})) {
        if (p.s == 0.0 && p.q > 1.0) continue;
        g.push_back(p);
    }
    return g;
}

std::vector<GridPoint> default_mixing_grid() { return product({0.3, 0.6, 0.9}, {-1.0, 0.0, 0.5, 1.0}); }

std::vector<GridPoint> default_fannes_grid() {
    auto g = product({0.3, 0.5, 0.7}, {-2.0, -1.0, 0.0, 0.5, 1.0});
    const auto high = product({1.5, 2.0, 3.0}, {-1.0, -0.5, 0.0, 1.0, 2.0});
    g.insert(g.end(), high.begin(), high.end());
    return g;
}

std::vector<GridPoint> default_subadditivity_grid() {
    std::vector<GridPoint> g;
    for (double q : {1.5, 2.0, 3.0})
        for (double s : {1.0 / q, 1.0, 2.0}) g.push_back({q, s});
    return g;
}

std::vector<GridPoint> default_projective_grid() {
    return product({0.3, 0.7, 1.5, 2.0, 3.0}, {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0});
}

std::vector<GridPoint> default_qubit_grid() {
    return product({0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0}, {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0});
}

std::vector<double> default_audenaert_q_grid() { return {1.5, 2.0, 3.0}; }

std::vector<double> default_pinching_q_grid() { return {0.3, 0.5, 1.5, 2.0, 2.5, 4.0}; }

std::vector<GridPoint> default_violation_grid(ViolationRegion region) {
    if (region == ViolationRegion::HighQNegativeS) return product({2.0, 1.5, 3.0}, {-1.0, -2.0, -0.5});
    return product({0.5, 0.3, 0.7}, {1.0, 0.5, 2.0});
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "ensemble", "mixing",   "scalar-lemma", "fannes",     "audenaert",     "subadd",
        "subadd-violation", "triangle", "pinching", "projective", "qubit-measure",
    };
    return names;
}

std::vector<CheckReport> run_check(const std::string& name, const CheckConfig& cfg) {
    using Runner = std::function<std::vector<CheckReport>(const CheckConfig&)>;
    auto one = [](CheckReport (*fn)(const CheckConfig&)) {
        return Runner([fn](const CheckConfig& c) { return std::vector<CheckReport>{fn(c)}; });
    };
    static const std::map<std::string, Runner> table = {
        {"ensemble", one(check_ensemble_bound)},
        {"mixing", one(check_mixing_bound)},
        {"scalar-lemma", one(check_scalar_lemma)},
        {"fannes", one(check_fannes)},
        {"audenaert", one(check_audenaert)},
        {"subadd", one(check_subadditivity)},
        {"subadd-violation",
         [](const CheckConfig& c) {
             return std::vector<CheckReport>{
                 search_subadditivity_violation(ViolationRegion::HighQNegativeS, c),
                 search_subadditivity_violation(ViolationRegion::LowQPositiveS, c),
             };
         }},
        {"triangle", one(check_triangle)},
        {"pinching", one(check_pinching_traces)},
        {"projective", one(check_projective_nondecrease)},
        {"qubit-measure",
         [](const CheckConfig& c) {
             const double diag[2] = {0.8, 0.2};
             auto r = qubit_measurement_decrease(DensityOperator::from_diagonal(diag), c.params, c.reversed);
             r.seed = c.seed;  // deterministic; the seed is echoed for uniform reports
             return std::vector<CheckReport>{r};
         }},
    };
    if (name == "all") {
        // Grid overrides are check-specific; the full suite uses defaults.
        CheckConfig defaults;
        defaults.trials = cfg.trials;
        defaults.seed = cfg.seed;
        defaults.reversed = cfg.reversed;
        std::vector<CheckReport> out;
        for (const auto& n : check_names()) {
            auto part = table.at(n)(defaults);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    const auto it = table.find(name);
    if (it == table.end()) throw InvalidIndex("unknown check name: " + name);
    return it->second(cfg);
}

bool report_ok(const CheckReport& r) {
    if (r.check_name.rfind("subadd-violation", 0) == 0) return r.failures >= 1;
    return r.failures == 0;
}

std::vector<CheckReport> run_negative_controls(std::size_t trials, std::uint64_t seed) {
    CheckConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.reversed = true;
    std::vector<CheckReport> out;
    for (const auto& n : check_names()) {
        if (n == "subadd-violation") continue;
        auto part = run_check(n, cfg);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace entropy_kit
