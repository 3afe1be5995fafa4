#include "doctest.h"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli_support.hpp"
#include "majconf/validate.hpp"

using namespace clitest;

namespace {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        FAIL("missing column " << name);
        return 0;
    }
    double num(std::size_t row, const std::string& name) const { return std::stod(rows[row][col(name)]); }
};

Table parse_csv(const std::string& text) {
    const auto lines = data_lines(text);
    Table t;
    REQUIRE_FALSE(lines.empty());
    t.columns = split(lines[0], ',');
    for (std::size_t i = 1; i < lines.size(); ++i) {
        t.rows.push_back(split(lines[i], ','));
        REQUIRE(t.rows.back().size() == t.columns.size());
    }
    return t;
}

}  // namespace

TEST_CASE("spectrum: analytic rows") {
    REQUIRE(run("spectrum --m 0 --b 1 --n-max 3 --method analytic") == 0);
    const std::string out = stdout_of();
    const Table t = parse_csv(out);
    CHECK(t.columns == std::vector<std::string>{"method", "n", "energy_plus", "energy_minus", "spacing_to_next"});
    REQUIRE(t.rows.size() == 4);
    const double expected[] = {0.0, 1.41421356, 2.0, 2.44948975};
    for (std::size_t n = 0; n < 4; ++n) {
        CHECK(t.rows[n][0] == "analytic");
        CHECK(t.rows[n][1] == std::to_string(n));
        CHECK(t.num(n, "energy_plus") == doctest::Approx(expected[n]).epsilon(1e-8));
        CHECK(t.num(n, "energy_minus") == doctest::Approx(-expected[n]).epsilon(1e-8));
    }
    CHECK(t.num(3, "spacing_to_next") == doctest::Approx(std::sqrt(8.0) - std::sqrt(6.0)).epsilon(1e-10));

    CHECK(out.rfind("# maj-confine ", 0) == 0);
    CHECK(header_value(out, "units") == "c = hbar = 1");
    CHECK(header_value(out, "config").find("b=1") != std::string::npos);
}

TEST_CASE("spectrum: invalid b is a usage error") {
    CHECK(run("spectrum --b -1") == 2);
    CHECK(stderr_of().find("b must be positive") != std::string::npos);
    CHECK(run("spectrum --b 0") == 2);
    CHECK(run("spectrum --n-max -1") == 2);
    CHECK(run("spectrum --grid 0:1") == 2);
    CHECK(run("spectrum --grid -1:1:101") == 2);  // misses |r| <= 8
    CHECK(run("spectrum --grid -1:1:101 --allow-narrow-grid") == 0);
    CHECK(run("spectrum --method nonsense") == 2);
    CHECK(run("") == 2);
}

TEST_CASE("spectrum: all methods agree within the printed tolerance") {
    REQUIRE(run("spectrum --method all --m 1 --b 2") == 0);
    const std::string out = stdout_of();
    const std::string tol_line = header_value(out, "tolerance");
    const auto fd_pos = tol_line.find("fd=");
    REQUIRE(fd_pos != std::string::npos);
    const double fd_tol = std::stod(tol_line.substr(fd_pos + 3));
    CHECK(fd_tol == 5e-4);

    const Table t = parse_csv(out);
    std::map<std::string, std::vector<double>> by_method;
    for (std::size_t i = 0; i < t.rows.size(); ++i) by_method[t.rows[i][0]].push_back(t.num(i, "energy_plus"));
    REQUIRE(by_method["analytic"].size() == 7);
    REQUIRE(by_method["fd"].size() == 7);
    REQUIRE(by_method["shooting"].size() == 7);
    for (std::size_t n = 0; n < 7; ++n) {
        const double exact = std::sqrt(2.0 * n * 2.0);
        CHECK(std::abs(by_method["fd"][n] - exact) <= fd_tol);
        // shooting tolerance is on beta/b = (E^2 + b)/b
        const double e = by_method["shooting"][n];
        CHECK(std::abs((e * e + 2.0) / 2.0 - (2.0 * n + 1.0)) <= 1e-6);
    }
}

TEST_CASE("spectrum: json output carries the header") {
    REQUIRE(run("spectrum --n-max 2 --format json") == 0);
    const auto doc = nlohmann::json::parse(stdout_of());
    CHECK(doc["units"] == "c = hbar = 1");
    CHECK(doc["config"]["n_max"] == 2);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][2]["energy_plus"] == "2");
}

TEST_CASE("modes: zero mode, node count, norm") {
    REQUIRE(run("modes --n 0") == 0);
    const Table zero = parse_csv(stdout_of());
    CHECK(zero.columns == std::vector<std::string>{"x", "r", "phi", "chi_real", "chi_imag", "abs_psi_sq"});
    REQUIRE(zero.rows.size() == 4001);
    for (std::size_t i = 0; i < zero.rows.size(); ++i) {
        CHECK(zero.num(i, "chi_real") == 0.0);
        CHECK(zero.num(i, "chi_imag") == 0.0);
    }

    REQUIRE(run("modes --n 1 --m 0.5 --b 1.5") == 0);
    const std::string out = stdout_of();
    const Table one = parse_csv(out);
    int changes = 0;
    double previous = 0.0;
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        const double phi = one.num(i, "phi");
        if (std::abs(phi) < 1e-12) continue;
        if (previous != 0.0 && (phi > 0) != (previous > 0)) ++changes;
        previous = phi;
    }
    CHECK(changes == 1);

    // independent trapezoid over the printed column
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < one.rows.size(); ++i)
        integral += 0.5 * (one.num(i, "abs_psi_sq") + one.num(i + 1, "abs_psi_sq")) *
                    (one.num(i + 1, "x") - one.num(i, "x"));
    CHECK(std::abs(integral - 1.0) < 1e-6);
    CHECK(std::abs(std::stod(header_value(out, "norm")) - 1.0) < 1e-6);
    CHECK(header_value(out, "mode").find("energy=1.73205080757") != std::string::npos);
}

TEST_CASE("modes: invalid n") {
    CHECK(run("modes --n 7") == 2);
    CHECK(run("modes --n -1") == 2);
    CHECK(run("modes") == 2);
    CHECK(run("modes --n 1 --sign 2") == 2);
    CHECK(run("modes --n 7 --n-max 7") == 0);
}

TEST_CASE("validate: exit status and report completeness") {
    const auto report = path_for("report.jsonl");
    CHECK(run("validate --out '" + report.string() + "'") == 0);
    const auto lines = data_lines(read_file(report));
    CHECK(lines.size() == majconf::registered_checks().size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = nlohmann::json::parse(lines[i]);
        CHECK(line["check"] == majconf::registered_checks()[i]);
        CHECK(line["status"] == "pass");
    }
    CHECK(stdout_of().find("clifford_algebra") != std::string::npos);  // summary table

    CHECK(run("validate --tol 0 --out '" + report.string() + "'") == 1);
    CHECK(data_lines(read_file(report)).size() == majconf::registered_checks().size());

    // report on stdout, table on stderr
    CHECK(run("validate") == 0);
    CHECK(data_lines(stdout_of()).size() == majconf::registered_checks().size());
    CHECK(stderr_of().find("clifford_algebra") != std::string::npos);
}

TEST_CASE("sweep: sqrt(b) collapse") {
    REQUIRE(run("sweep --b-values 0.5,1,2 --n-max 3") == 0);
    const Table t = parse_csv(stdout_of());
    CHECK(t.columns == std::vector<std::string>{"method", "b", "n", "energy", "energy_over_sqrt_b"});
    REQUIRE(t.rows.size() == 12);
    std::vector<double> level_one;
    std::map<std::string, std::vector<double>> collapsed;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i][2] == "1") level_one.push_back(t.num(i, "energy"));
        collapsed[t.rows[i][2]].push_back(t.num(i, "energy_over_sqrt_b"));
    }
    REQUIRE(level_one.size() == 3);
    CHECK(level_one[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(level_one[1] == doctest::Approx(1.41421356).epsilon(1e-8));
    CHECK(level_one[2] == doctest::Approx(2.0).epsilon(1e-10));
    for (const auto& [n, values] : collapsed)
        for (const double v : values) CHECK(std::abs(v - values.front()) <= 1e-12);

    CHECK(run("sweep --b-values ''") == 2);
    CHECK(run("sweep --b-values 1,-2") == 2);
    CHECK(run("sweep") == 2);
    CHECK(run("sweep --b-values 0.5,2 --method fd") == 0);
}

TEST_CASE("config file is overridden by flags") {
    const auto config = path_for("run.ini");
    {
        std::ofstream out(config);
        out << "b=2\nn-max=2\nmethod=analytic\n";
    }
    REQUIRE(run("spectrum --config '" + config.string() + "'") == 0);
    Table t = parse_csv(stdout_of());
    REQUIRE(t.rows.size() == 3);
    CHECK(t.num(1, "energy_plus") == doctest::Approx(2.0));

    REQUIRE(run("spectrum --config '" + config.string() + "' --b 0.5") == 0);
    t = parse_csv(stdout_of());
    REQUIRE(t.rows.size() == 3);
    CHECK(t.num(1, "energy_plus") == doctest::Approx(1.0));
}

TEST_CASE("repeated runs are byte-identical") {
    const auto a = path_for("det_a.csv");
    const auto b = path_for("det_b.csv");
    for (const std::string cmd : {"spectrum --method all --m 3 --b 0.5", "modes --n 3 --m 1 --sign -1",
                                  "sweep --b-values 0.5,1 --method shooting --n-max 2"}) {
        REQUIRE(run(cmd + " --out '" + a.string() + "'") == 0);
        REQUIRE(run(cmd + " --out '" + b.string() + "'") == 0);
        const std::string first = read_file(a);
        CHECK_FALSE(first.empty());
        CHECK(first == read_file(b));
    }
}

TEST_CASE("negative mass warns but runs") {
    CHECK(run("spectrum --m -1 --n-max 1") == 0);
    CHECK(stderr_of().find("warning") != std::string::npos);
}
