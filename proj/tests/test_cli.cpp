#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entropy_kit/cli.hpp"
#include "entropy_kit/entropies.hpp"
#include "entropy_kit/matrix_io.hpp"
#include "entropy_kit/random.hpp"

using namespace entropy_kit;
using doctest::Approx;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("number formatting and list parsing") {
    CHECK(cli::format_number(0.75) == "0.75");
    CHECK(cli::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(cli::format_number(NAN) == "nan");
    CHECK(cli::parse_real_list("1e6, 0.5,+2") == std::vector<double>{1e6, 0.5, 2.0});
    CHECK_THROWS_AS(cli::parse_real_list("1,,2"), ParseError);
    CHECK_THROWS_AS(cli::parse_real_list("1,x"), ParseError);
}

TEST_CASE("entropy subcommand") {
    auto r = run({"entropy", "--dist", "0.25,0.25,0.25,0.25", "--q", "2", "--s", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.75\n");

    r = run({"entropy", "--dist", "1,0", "--q", "0.5", "--s", "-1"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == 0.0);

    r = run({"entropy", "--dist", "0.5,0.5", "--q", "2", "--s", "0", "--all", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["renyi"].get<double>() == Approx(std::log(2.0)));
    CHECK(j["tsallis"].get<double>() == Approx(0.5));
    CHECK(j["type_q"].get<double>() == Approx(1.0));
    CHECK(j["shannon"].get<double>() == Approx(std::log(2.0)));

    const auto path = std::filesystem::temp_directory_path() / "entropy_kit_cli_state.json";
    const auto rho = random_density(3, 3, 5);
    write_matrix_file(path, rho.matrix());
    r = run({"entropy", "--rho", path.string(), "--q", "1", "--s", "0"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == Approx(von_neumann(rho)).epsilon(1e-11));
    r = run({"entropy", "--rho", path.string(), "--all", "--csv"});
    CHECK(lines(r.out).front() == "quantity,value");
    CHECK(r.out.find("von_neumann,") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(run({"entropy", "--q", "2"}).code == 2);
    CHECK(run({"entropy", "--dist", "0.5,0.5", "--rho", "x.json"}).code == 2);
    CHECK(run({"entropy", "--dist", "0.5,0.6"}).code == 2);
    CHECK(run({"entropy", "--dist", "0.5,0.5", "--q", "0"}).code == 2);
    CHECK(run({"entropy", "--rho", "/nonexistent.json"}).code == 2);
}

TEST_CASE("check subcommand") {
    auto r = run({"check", "fannes", "--trials", "0"});
    CHECK(r.code == 0);

    r = run({"check", "subadd-violation", "--seed", "1", "--trials", "5", "--json"});
    CHECK(r.code == 0);
    const auto docs = lines(r.out);
    REQUIRE(docs.size() == 2);
    const auto first = nlohmann::json::parse(docs[0]);
    CHECK(first["max_violation"].get<double>() >= 1.0);
    CHECK(first["seed"] == 1);

    r = run({"check", "all", "--trials", "10", "--json"});
    CHECK(r.code == 0);
    for (const auto& l : lines(r.out)) CHECK(nlohmann::json::accept(l));

    r = run({"check", "mixing", "--trials", "10", "--csv"});
    CHECK(lines(r.out).front() == "check,trials,skipped,failures,max_violation,seed,ok");
    CHECK(lines(r.out).size() == 2);

    r = run({"check", "projective", "--trials", "10", "--q", "2", "--s", "-1", "--dims", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS projective: trials=10 ", 0) == 0);

    r = run({"check", "pinching", "--trials", "10", "--q-grid", "0.5,3", "--json"});
    CHECK(nlohmann::json::parse(r.out)["trials"] == 30);  // q > 1 adds the Schatten-norm comparison

    CHECK(run({"check", "mixing", "--trials", "10", "--negative-control"}).code == 0);
    CHECK(run({"check", "bogus"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", "mixing", "--q", "2", "--s", "1"}).code == 2);  // outside the theorem's range
}

TEST_CASE("seed from environment") {
    setenv("ENTROPY_KIT_SEED", "17", 1);
    auto r = run({"check", "mixing", "--trials", "3", "--json"});
    CHECK(nlohmann::json::parse(r.out)["seed"] == 17);
    r = run({"check", "mixing", "--trials", "3", "--json", "--seed", "5"});
    CHECK(nlohmann::json::parse(r.out)["seed"] == 5);
    setenv("ENTROPY_KIT_SEED", "junk", 1);
    CHECK(run({"check", "mixing", "--trials", "3"}).code == 2);
    unsetenv("ENTROPY_KIT_SEED");
    r = run({"check", "mixing", "--trials", "3", "--json"});
    CHECK(nlohmann::json::parse(r.out)["seed"] == 42);
}

TEST_CASE("stability subcommand") {
    auto r = run({"stability", "--example", "0", "--q", "0.5", "--s", "-1", "--eps", "0.01", "--dims", "10,1e3,1e6",
                  "--csv"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "d,ratio");
    CHECK(rows[3].rfind("1000000,", 0) == 0);
    double prev = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(rows[i].substr(rows[i].find(',') + 1));
        CHECK(v > prev);
        prev = v;
    }

    r = run({"stability", "--example", "1", "--q", "2", "--s", "-1", "--eps", "0.1", "--dims", "1e2,1e4,1e6",
             "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][2]["ratio"].get<double>() > 0.95);

    CHECK(run({"stability", "--example", "2"}).code == 2);
    CHECK(run({"stability", "--dims", "1.5"}).code == 2);
    CHECK(run({"stability", "--eps", "0"}).code == 2);
}

TEST_CASE("bounds subcommand") {
    auto r = run({"bounds", "--q", "2", "--s", "1", "--d", "4", "--eps", "0.1"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows[0] == "eps,bound_name,value,in_validity");
    CHECK(r.out.find("0.1,tsallis_high_q,0.186666666667,1") != std::string::npos);
    CHECK(r.out.find("0.1,unified_fannes,0.186666666667,1") != std::string::npos);
    CHECK(r.out.find("0.1,lipschitz,0.4,1") != std::string::npos);
    CHECK(r.out.find("0.1,max_unified,0.75,1") != std::string::npos);

    r = run({"bounds", "--q", "2", "--s", "1", "--d", "4", "--eps-grid", "0"});
    const auto zero_rows = lines(r.out);
    CHECK(zero_rows.size() == 7);
    for (std::size_t i = 1; i < zero_rows.size(); ++i) {
        if (zero_rows[i].find("max_unified") != std::string::npos) continue;  // eps-independent
        CHECK(zero_rows[i].substr(zero_rows[i].size() - 4) == ",0,1");
    }

    r = run({"bounds", "--q", "0.5", "--s", "0", "--d", "4", "--eps-grid", "0.1,0.125,0.15"});
    CHECK(r.out.find("0.125,tsallis_low_q,") != std::string::npos);
    CHECK(r.out.find("0.125,unified_fannes,nan,0") == std::string::npos);
    CHECK(r.out.find("0.15,unified_fannes,nan,0") != std::string::npos);
    CHECK(r.out.find("0.15,tsallis_low_q,nan,0") != std::string::npos);

    r = run({"bounds", "--q", "2", "--s", "1", "--d", "4", "--eps", "0.1", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 6);
    CHECK(run({"bounds", "--d", "1"}).code == 2);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "entropy_kit_cli_out.csv";
    auto r = run({"bounds", "--eps", "0.1", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(std::filesystem::file_size(path) > 0);
    std::filesystem::remove(path);
}

TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("stability") != std::string::npos);
}
