#include "entropy_kit/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "entropy_kit/bounds.hpp"
#include "entropy_kit/entropies.hpp"
#include "entropy_kit/matrix_io.hpp"
#include "entropy_kit/verify.hpp"

namespace entropy_kit::cli {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(',', start), text.size());
        std::string item = text.substr(start, end - start);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        double v = 0.0;
        const char* first = item.data();
        if (!item.empty() && item.front() == '+') ++first;
        const auto res = std::from_chars(first, item.data() + item.size(), v);
        if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
            throw ParseError("not a number: \"" + item + "\"");
        }
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

namespace {

struct Common {
    bool json = false;
    bool csv = false;
    std::string out_path;

    OutputFormat format() const { return json ? OutputFormat::Json : csv ? OutputFormat::Csv : OutputFormat::Text; }
};

void add_format_flags(CLI::App* app, Common& c) {
    auto* j = app->add_flag("--json", c.json, "JSON output (one document per report)");
    app->add_flag("--csv", c.csv, "CSV output")->excludes(j);
    app->add_option("--out", c.out_path, "Write output to this file instead of stdout");
}

std::uint64_t to_dimension(double x) {
    if (!(x >= 1.0) || x != std::floor(x) || x > 9.0e15) {
        throw ParseError("dimension must be a positive integer, got " + format_number(x));
    }
    return static_cast<std::uint64_t>(x);
}

std::vector<std::size_t> to_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    for (double x : parse_real_list(text)) dims.push_back(static_cast<std::size_t>(to_dimension(x)));
    return dims;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ENTROPY_KIT_SEED")) {
        std::uint64_t v = 0;
        const std::string text(env);
        const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec == std::errc() && res.ptr == text.data() + text.size()) return v;
        throw ParseError("ENTROPY_KIT_SEED is not an unsigned integer: " + text);
    }
    return 42;
}

// --- entropy -------------------------------------------------------------

struct EntropyArgs {
    std::string dist;
    std::string rho_path;
    double q = 1.0;
    double s = 0.0;
    bool all = false;
};

void cmd_entropy(const EntropyArgs& a, OutputFormat fmt, std::ostream& out) {
    if (a.dist.empty() == a.rho_path.empty()) throw ParseError("give exactly one of --dist or --rho");
    const UnifiedParams params(a.q, a.s);
    std::vector<std::pair<std::string, double>> rows;
    if (!a.dist.empty()) {
        const ProbabilityDistribution p(parse_real_list(a.dist));
        rows.emplace_back("unified", unified_classical(p, params));
        if (a.all) {
            rows.emplace_back("renyi", renyi(p, a.q));
            rows.emplace_back("tsallis", tsallis(p, a.q));
            rows.emplace_back("type_q", type_q_entropy(p, a.q));
            rows.emplace_back("shannon", shannon(p));
        }
    } else {
        const DensityOperator rho(read_matrix_file(a.rho_path));
        rows.emplace_back("unified", unified_quantum(rho, params));
        if (a.all) {
            const auto& ev = rho.eigenvalues();
            rows.emplace_back("renyi", quantum_renyi(rho, a.q));
            rows.emplace_back("tsallis", quantum_tsallis(rho, a.q));
            rows.emplace_back("type_q", type_q_entropy(ProbabilityDistribution({ev.begin(), ev.end()}), a.q));
            rows.emplace_back("von_neumann", von_neumann(rho));
        }
    }
    switch (fmt) {
        case OutputFormat::Json: {
            nlohmann::json j{{"q", a.q}, {"s", a.s}};
            for (const auto& [k, v] : rows) j[k] = v;
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "quantity,value\n";
            for (const auto& [k, v] : rows) out << k << ',' << format_number(v) << '\n';
            break;
        case OutputFormat::Text:
            if (!a.all) {
                out << format_number(rows.front().second) << '\n';
            } else {
                for (const auto& [k, v] : rows) out << k << ' ' << format_number(v) << '\n';
            }
            break;
    }
}

// --- check ---------------------------------------------------------------

struct CheckArgs {
    std::string name;
    std::size_t trials = 1000;
    std::optional<std::uint64_t> seed;
    std::optional<double> q;
    std::optional<double> s;
    std::string q_grid;
    std::string s_grid;
    std::string dims;
    bool negative_control = false;
};

int cmd_check(const CheckArgs& a, OutputFormat fmt, std::ostream& out) {
    CheckConfig cfg;
    cfg.trials = a.trials;
    cfg.seed = a.seed ? *a.seed : default_seed();
    cfg.reversed = a.negative_control;
    if (!a.dims.empty()) cfg.dims = to_dims(a.dims);

    std::vector<double> qs = a.q ? std::vector<double>{*a.q} : std::vector<double>{};
    std::vector<double> ss = a.s ? std::vector<double>{*a.s} : std::vector<double>{};
    if (!a.q_grid.empty()) qs = parse_real_list(a.q_grid);
    if (!a.s_grid.empty()) ss = parse_real_list(a.s_grid);
    cfg.q_grid = qs;
    if (!ss.empty() && qs.empty()) throw ParseError("an s grid needs a q grid (--q or --q-grid)");
    for (double q : qs)
        for (double s : ss) cfg.params.push_back({q, s});
    const bool q_only = a.name == "audenaert" || a.name == "pinching";
    if (!qs.empty() && ss.empty() && !q_only && a.name != "scalar-lemma") {
        throw ParseError("check " + a.name + " needs both a q grid and an s grid");
    }

    const auto reports = run_check(a.name, cfg);
    bool ok = true;
    if (fmt == OutputFormat::Csv) out << "check,trials,skipped,failures,max_violation,seed,ok\n";
    for (const auto& r : reports) {
        const bool good = a.negative_control ? r.failures > 0 : report_ok(r);
        ok = ok && good;
        const std::string mv = r.max_violation ? format_number(*r.max_violation) : "nan";
        switch (fmt) {
            case OutputFormat::Json:
                out << r.to_json().dump() << '\n';
                break;
            case OutputFormat::Csv:
                out << r.check_name << ',' << r.trials << ',' << r.skipped << ',' << r.failures << ',' << mv << ','
                    << r.seed << ',' << (good ? 1 : 0) << '\n';
                break;
            case OutputFormat::Text:
                out << (good ? "PASS " : "FAIL ") << r.check_name << ": trials=" << r.trials
                    << " skipped=" << r.skipped << " failures=" << r.failures << " max_violation=" << mv << '\n';
                break;
        }
    }
    return ok ? 0 : 1;
}

// --- stability -----------------------------------------------------------

struct StabilityArgs {
    int example = 0;
    std::string dims = "10,1000,1000000";
    double q = 0.5;
    double s = -1.0;
    double eps = 0.01;
};

void cmd_stability(const StabilityArgs& a, OutputFormat fmt, std::ostream& out) {
    if (a.example != 0 && a.example != 1) throw InvalidIndex("--example must be 0 or 1");
    const auto variant = a.example == 0 ? StabilityVariant::Example0 : StabilityVariant::Example1;
    std::vector<std::pair<std::uint64_t, double>> rows;
    for (double x : parse_real_list(a.dims)) {
        const auto d = to_dimension(x);
        rows.emplace_back(d, stability_ratio(StabilityExample(variant, a.eps, d, a.q, a.s)));
    }
    if (fmt == OutputFormat::Json) {
        nlohmann::json j{{"example", a.example}, {"q", a.q}, {"s", a.s}, {"eps", a.eps}, {"rows", nlohmann::json::array()}};
        for (const auto& [d, r] : rows) j["rows"].push_back({{"d", d}, {"ratio", r}});
        out << j.dump() << '\n';
        return;
    }
    const char sep = fmt == OutputFormat::Csv ? ',' : ' ';
    out << "d" << sep << "ratio\n";
    for (const auto& [d, r] : rows) out << d << sep << format_number(r) << '\n';
}

// --- bounds --------------------------------------------------------------

struct BoundsArgs {
    double q = 2.0;
    double s = 1.0;
    std::uint64_t d = 4;
    std::optional<double> eps;
    std::string eps_grid = "0,0.05,0.1,0.15,0.2";
};

void cmd_bounds(const BoundsArgs& a, OutputFormat fmt, std::ostream& out) {
    const auto grid = a.eps ? std::vector<double>{*a.eps} : parse_real_list(a.eps_grid);
    struct Row {
        double eps;
        std::string name;
        std::optional<double> value;
    };
    std::vector<Row> rows;
    for (double eps : grid) {
        const BoundSpec spec(a.q, a.s, a.d, eps);
        auto attempt = [&](const char* name, auto&& fn) {
            try {
                rows.push_back({eps, name, fn()});
            } catch (const OutOfValidity&) {
                rows.push_back({eps, name, std::nullopt});
            } catch (const InvalidIndex&) {
                rows.push_back({eps, name, std::nullopt});
            }
        };
        attempt("tsallis_low_q", [&] { return fannes_tsallis_low_q(spec); });
        attempt("tsallis_high_q", [&] { return fannes_tsallis_high_q(spec); });
        attempt("unified_fannes", [&] { return unified_fannes_bound(spec); });
        attempt("lipschitz", [&] {
            if (!(a.s >= 1.0)) throw OutOfValidity("Lipschitz bound needs s >= 1");
            return lipschitz_bound(eps, a.q);
        });
        attempt("max_unified", [&] { return max_unified(a.q, a.s, a.d); });
        attempt("stability_ratio", [&] { return stability_ratio_bound(spec); });
    }
    if (fmt == OutputFormat::Json) {
        nlohmann::json j{{"q", a.q}, {"s", a.s}, {"d", a.d}, {"rows", nlohmann::json::array()}};
        for (const auto& r : rows) {
            j["rows"].push_back({{"eps", r.eps},
                                 {"bound_name", r.name},
                                 {"value", r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr)},
                                 {"in_validity", r.value.has_value()}});
        }
        out << j.dump() << '\n';
        return;
    }
    out << "eps,bound_name,value,in_validity\n";
    for (const auto& r : rows) {
        out << format_number(r.eps) << ',' << r.name << ',' << (r.value ? format_number(*r.value) : "nan") << ','
            << (r.value ? 1 : 0) << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unified (q,s)-entropies: evaluation, continuity bounds and inequality checks", "entropy_kit"};
    app.require_subcommand(1);

    Common common;
    EntropyArgs ea;
    CheckArgs ca;
    StabilityArgs sa;
    BoundsArgs ba;

    auto* entropy = app.add_subcommand("entropy", "Evaluate entropies of a distribution or a density matrix");
    entropy->add_option("--dist", ea.dist, "Comma-separated probabilities");
    entropy->add_option("--rho", ea.rho_path, "Density matrix JSON file {\"d\", \"re\", \"im\"}");
    entropy->add_option("--q", ea.q, "Entropic index q > 0")->capture_default_str();
    entropy->add_option("--s", ea.s, "Entropic index s")->capture_default_str();
    entropy->add_flag("--all", ea.all, "Also print Renyi, Tsallis, type-q and Shannon/von Neumann");
    add_format_flags(entropy, common);

    auto* check = app.add_subcommand("check", "Run randomized inequality checks");
    std::string names = "all";
    for (const auto& n : check_names()) names += ", " + n;
    check->add_option("name", ca.name, "Check suite: " + names)->required();
    check->add_option("--trials", ca.trials, "Random instances per suite")->capture_default_str();
    check->add_option("--seed", ca.seed, "Master seed (default: $ENTROPY_KIT_SEED or 42)");
    check->add_option("--q", ca.q, "Single q value");
    check->add_option("--s", ca.s, "Single s value");
    check->add_option("--q-grid", ca.q_grid, "Comma-separated q values");
    check->add_option("--s-grid", ca.s_grid, "Comma-separated s values (grid is q x s)");
    check->add_option("--dims", ca.dims, "Comma-separated dimensions (factor dimensions for bipartite checks)");
    check->add_flag("--negative-control", ca.negative_control,
                    "Reverse every inequality; succeeds only if each suite reports failures");
    add_format_flags(check, common);

    auto* stability = app.add_subcommand("stability", "Normalized entropy differences of the stability examples");
    stability->add_option("--example", sa.example, "0 or 1")->capture_default_str();
    stability->add_option("--dims", sa.dims, "Comma-separated dimensions, e.g. 10,1e4,1e8")->capture_default_str();
    stability->add_option("--q", sa.q)->capture_default_str();
    stability->add_option("--s", sa.s)->capture_default_str();
    stability->add_option("--eps", sa.eps, "Trace distance in (0, 1)")->capture_default_str();
    add_format_flags(stability, common);

    auto* bounds = app.add_subcommand("bounds", "Tabulate continuity bounds over an eps grid");
    bounds->add_option("--q", ba.q)->capture_default_str();
    bounds->add_option("--s", ba.s)->capture_default_str();
    bounds->add_option("--d", ba.d)->capture_default_str();
    bounds->add_option("--eps", ba.eps, "Single trace distance");
    bounds->add_option("--eps-grid", ba.eps_grid, "Comma-separated trace distances")->capture_default_str();
    add_format_flags(bounds, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!common.out_path.empty()) {
            file.open(common.out_path);
            if (!file) throw ParseError("cannot open output file " + common.out_path);
            sink = &file;
        }
        const auto fmt = common.format();
        int code = 0;
        if (entropy->parsed()) {
            cmd_entropy(ea, fmt, *sink);
        } else if (check->parsed()) {
            code = cmd_check(ca, fmt, *sink);
        } else if (stability->parsed()) {
            cmd_stability(sa, fmt, *sink);
        } else if (bounds->parsed()) {
            cmd_bounds(ba, fmt, *sink);
        }
        sink->flush();
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace entropy_kit::cli
