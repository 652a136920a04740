#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chivar/asymptotics.hpp"
#include "chivar/numformat.hpp"
#include "chivar/params.hpp"
#include "chivar/threshold.hpp"

namespace fs = std::filesystem;
using namespace chivar;

namespace {

std::string cli() { return CHIVAR_CLI_PATH; }

int run(const std::string& args) {
    return std::system((cli() + " " + args + " > /dev/null 2>&1").c_str());
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        out.push_back(cells);
    }
    return out;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& leaf) {
    fs::path dir = fs::temp_directory_path() / "chivar_cli_tests" / leaf;
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("number formatting is locale-free and stable") {
    CHECK(g17(0.5) == "0.5");
    CHECK(g17(0.1) == "0.10000000000000001");
    CHECK(g17(-3.0) == "-3");
    CHECK(format_int(42) == "42");
    CHECK(g17(std::nan("")) == "nan");
}

TEST_CASE("exit codes: parameter, size, success") {
    CHECK(run("analytic --grid bogus --out " + scratch("ec1").string()) != 0);
    CHECK(run("definitely-not-a-command") != 0);
    // oracle out of range -> feasibility error 3
    int code = std::system((cli() + " oracle --n 12 --out " + scratch("ec2").string() +
                            " > /dev/null 2>&1")
                               .c_str());
    CHECK(WEXITSTATUS(code) == 3);
    int ok = std::system((cli() + " oracle --n 4 --out " + scratch("ec3").string() +
                          " > /dev/null 2>&1")
                             .c_str());
    CHECK(WEXITSTATUS(ok) == 0);
}

TEST_CASE("analytic table: sawtooth, lambda column, spot row, determinism") {
    fs::path out1 = scratch("an1");
    fs::path out2 = scratch("an2");
    std::string args = "analytic --n-min 1e3 --n-max 1e12 --points 160 --p 0.5 --out ";
    REQUIRE(run(args + out1.string()) == 0);
    REQUIRE(run(args + out2.string()) == 0);
    CHECK(slurp(out1 / "analytic.csv") == slurp(out2 / "analytic.csv"));
    std::string manifest = slurp(out1 / "manifest.txt");
    CHECK(manifest.find("status: ok") != std::string::npos);
    CHECK(manifest.find("finished:") != std::string::npos);

    auto rows = read_csv(out1 / "analytic.csv");
    REQUIRE(rows.size() == 161);
    long long prev_alpha = -1;
    double prev_rho = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        REQUIRE(row.size() == 12);
        long long alpha = std::stoll(row[3]);
        double rho = std::stod(row[5]);
        double lambda = std::stod(row[6]);
        CHECK(lambda == doctest::Approx(std::max(rho / 2, (1 - rho) / 2)).epsilon(1e-12));
        if (prev_alpha >= 0 && alpha == prev_alpha + 1) CHECK(rho < prev_rho);
        prev_alpha = alpha;
        prev_rho = rho;
    }
}

TEST_CASE("analytic spot row matches an independent record") {
    fs::path out = scratch("an3");
    REQUIRE(run("analytic --n-min 1e6 --n-max 1e6 --points 1 --out " + out.string()) == 0);
    auto rows = read_csv(out / "analytic.csv");
    REQUIRE(rows.size() == 2);
    ModelParams m(0.5);
    AsymptoticRecord rec = asymptotic_record(ScalePoint::from_count(1e6), m);
    CHECK(std::stod(rows[1][2]) == doctest::Approx(rec.alpha0).epsilon(1e-14));
    CHECK(std::stoll(rows[1][3]) == rec.alpha);
    CHECK(std::stod(rows[1][5]) == doctest::Approx(rec.rho_hat).epsilon(1e-14));
    CHECK(std::stod(rows[1][7]) == doctest::Approx(rec.f_est).epsilon(1e-14));
    double k_star = solve_k_star(1e6, rec.alpha - 1, m).k_star;
    CHECK(std::stod(rows[1][9]) == doctest::Approx(k_star).epsilon(1e-12));
}

TEST_CASE("lambda stays inside the zigzag band over the standard grid") {
    ModelParams m(0.5);
    for (int i = 0; i < 500; ++i) {
        double log10n = 3.0 + (12.0 - 3.0) * i / 499.0;
        AsymptoticRecord rec = asymptotic_record(ScalePoint::from_log10(log10n), m);
        if (rec.rho_hat >= 0.0 && rec.rho_hat <= 1.0) {
            CHECK(rec.lambda >= 0.2499);
            CHECK(rec.lambda <= 0.5001);
        }
    }
}

TEST_CASE("oracle table rows") {
    fs::path out = scratch("or1");
    REQUIRE(run("oracle --n 4 --out " + out.string()) == 0);
    auto rows = read_csv(out / "oracle.csv");
    bool found_422 = false, found_42 = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row[0] == "4" && row[1] == "2" && row[2] == "2") {
            found_422 = true;
            CHECK(row[3] == "3");
            CHECK(row[4] == "4");
            CHECK(row[7] == "3");
            CHECK(row[8] == "4");
            CHECK(row[9] == "1");
            CHECK(row[6] == "3"); // k_2(4)
        }
        if (row[0] == "4" && row[1] == "1") {
            found_42 = true;
            CHECK(row[6] == "4"); // k_1(4) = 4
        }
        CHECK(row[9] != "0"); // enumeration agrees on every n <= 5 row
    }
    CHECK(found_422);
    CHECK(found_42);
}

TEST_CASE("simulate with a single trial reports zero variance") {
    fs::path out = scratch("sim1");
    REQUIRE(run("simulate --n 12 --trials 1 --seed 5 --out " + out.string()) == 0);
    auto rows = read_csv(out / "simulate.csv");
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][5]) == 0.0);
    CHECK(rows[1][10] == "0");
}

TEST_CASE("exhausted solve budgets fail the run with exit code 4") {
    fs::path out = scratch("sim2");
    int code = std::system((cli() + " simulate --n 45 --trials 5 --budget-secs 1e-6 --out " +
                            out.string() + " > /dev/null 2>&1")
                               .c_str());
    CHECK(WEXITSTATUS(code) == 4);
    auto rows = read_csv(out / "simulate.csv");
    REQUIRE(rows.size() == 2);
    CHECK(std::stoi(rows[1][10]) >= 1); // censored trials reported, not hidden
    std::string manifest = slurp(out / "manifest.txt");
    CHECK(manifest.find("invalid-trial threshold exceeded") != std::string::npos);
}

TEST_CASE("coupling run emits histograms and the theoretical budget") {
    fs::path out = scratch("coup1");
    REQUIRE(run("coupling --n 45 --a 7 --r 2 --trials 4 --seed 3 --out " + out.string()) == 0);
    auto rows = read_csv(out / "coupling.csv");
    REQUIRE(rows.size() >= 3);
    bool summary_seen = false;
    int hist_total = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row[0] == "summary") {
            summary_seen = true;
            CHECK(std::stod(row[9]) == 1.0);                       // monotone fraction
            CHECK(std::stod(row[12]) == doctest::Approx(0.215).epsilon(5e-3)); // budget
        } else if (row[0] == "hist_chain") {
            hist_total += std::stoi(row[2]);
        }
    }
    CHECK(summary_seen);
    CHECK(hist_total == 4);
}

TEST_CASE("predict table carries the spot widths") {
    fs::path out = scratch("pred1");
    REQUIRE(run("predict --n-min 1e6 --n-max 1e6 --points 1 --out " + out.string()) == 0);
    auto rows = read_csv(out / "predict.csv");
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][5]) == doctest::Approx(0.996).epsilon(2e-2)); // w_n
    CHECK(std::abs(std::stod(rows[1][6]) - 0.319) <= 0.005);              // w_tilde
    // case tag well formed
    std::string tag = rows[1][2];
    CHECK((tag == "i" || tag == "ii" || tag == "iii" || tag == "iv" || tag == "bad"));
}
