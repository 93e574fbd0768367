#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "hcwand/bipartite.hpp"
#include "hcwand/output.hpp"
#include "hcwand/scan.hpp"

using namespace hcwand;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TEST_CASE("closed-form criticals per mode") {
    CHECK(closed_form_critical(ScanMode::TiQ4, 2, 1.0) == doctest::Approx(2.0));
    CHECK(closed_form_critical(ScanMode::BipQ2, 3, 0.0) ==
          doctest::Approx(256.0 / 27.0).epsilon(1e-14));
    CHECK(closed_form_critical(ScanMode::BipQ4I4, 2, 1.0) == doctest::Approx(2.0));
}

TEST_CASE("criterion sign flips at the closed form") {
    struct Case {
        ScanMode mode;
        int k;
        double aux;
    };
    for (const Case& c : {Case{ScanMode::TiQ4, 3, 0.4}, Case{ScanMode::BipQ2, 2, 0.0},
                          Case{ScanMode::BipQ4I4, 4, 2.0}}) {
        double cr = closed_form_critical(c.mode, c.k, c.aux);
        double below = critical_criterion(c.mode, c.k, c.aux, cr * (1 - 1e-6));
        double above = critical_criterion(c.mode, c.k, c.aux, cr * (1 + 1e-6));
        CHECK(below * above < 0.0);
    }
}

TEST_CASE("scan rows and refinement") {
    auto res = scan_lambda(ScanMode::BipQ2, 2, 0.0, 0.5, 4.0, 40, 2);
    REQUIRE(res.rows.size() >= 40);
    CHECK(res.closed_form_cr == doctest::Approx(2.0));
    CHECK(std::abs(res.empirical_cr - 2.0) < 1e-6 * 2.0);
    CHECK(res.rel_err < 1e-6);

    for (const auto& r : res.rows) {
        CHECK((r.count == 1 || r.count == 3));
        CHECK(r.a_star > 0.0);
        if (r.count == 3) {
            CHECK(r.lambda < res.empirical_cr);
            CHECK(r.a1 < r.a2);
        } else {
            CHECK(std::isnan(r.a1));
        }
    }
    SUBCASE("rows are sorted by lambda") {
        for (size_t i = 1; i < res.rows.size(); ++i)
            CHECK(res.rows[i].lambda > res.rows[i - 1].lambda);
    }
}

TEST_CASE("thread count does not change results") {
    auto r1 = scan_lambda(ScanMode::TiQ4, 2, 1.0, 1.0, 3.0, 25, 1);
    auto r4 = scan_lambda(ScanMode::TiQ4, 2, 1.0, 1.0, 3.0, 25, 4);
    REQUIRE(r1.rows.size() == r4.rows.size());
    for (size_t i = 0; i < r1.rows.size(); ++i) {
        CHECK(r1.rows[i].lambda == r4.rows[i].lambda);
        CHECK(r1.rows[i].a_star == r4.rows[i].a_star);
        CHECK(r1.rows[i].count == r4.rows[i].count);
    }
    CHECK(r1.empirical_cr == r4.empirical_cr);
}

TEST_CASE("environment thread override is honored") {
    setenv("HCWAND_THREADS", "2", 1);
    auto r = scan_lambda(ScanMode::BipQ2, 2, 0.0, 1.0, 3.0, 10, 0);
    unsetenv("HCWAND_THREADS");
    CHECK(r.rows.size() >= 10);
}

TEST_CASE("format_double round-trips") {
    for (double v : {1.0, 1.0 / 3.0, 2.718281828459045, 1e-300, 123456789.123456789}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(std::nan("")).empty());
}

TEST_CASE("csv and json scan outputs carry identical values") {
    auto res = scan_lambda(ScanMode::BipQ4I4, 2, 0.5, 0.8, 2.5, 12, 2);
    auto csv = parse_csv(scan_to_csv(res));
    nlohmann::json j = scan_to_json(res);

    REQUIRE(csv.size() == res.rows.size() + 1);
    CHECK(csv[0] == std::vector<std::string>{"lambda", "count", "a_star", "a1", "a2",
                                             "deriv_at_x0"});
    REQUIRE(j["rows"].size() == res.rows.size());
    for (size_t i = 0; i < res.rows.size(); ++i) {
        const auto& row = csv[i + 1];
        REQUIRE(row.size() == 6);
        CHECK(std::stod(row[0]) == res.rows[i].lambda);
        CHECK(std::stoi(row[1]) == res.rows[i].count);
        CHECK(std::stod(row[2]) == res.rows[i].a_star);
        if (res.rows[i].count == 3) {
            CHECK(std::stod(row[3]) == res.rows[i].a1);
            CHECK(std::stod(row[4]) == res.rows[i].a2);
            CHECK(j["rows"][i]["a1"].get<double>() == std::stod(row[3]));
        } else {
            CHECK(row[3].empty());
            CHECK(row[4].empty());
            CHECK(j["rows"][i]["a1"].is_null());
        }
        CHECK(j["rows"][i]["lambda"].get<double>() == std::stod(row[0]));
        CHECK(j["rows"][i]["count"].get<int>() == res.rows[i].count);
    }
    CHECK(j["critical"]["closed_form"].get<double>() == res.closed_form_cr);
    CHECK(j["critical"]["empirical"].get<double>() == res.empirical_cr);
    CHECK(j["config"]["mode"].get<std::string>() == mode_name(ScanMode::BipQ4I4));
    CHECK(j["config"]["k"].get<int>() == 2);
}

TEST_CASE("curve emission and serialization") {
    auto rows = emit_curve(3, 0.4, 0.25, 4.0, 41);
    REQUIRE(rows.size() == 41);
    CHECK(rows.front().t == doctest::Approx(0.25));
    CHECK(rows.back().t == doctest::Approx(4.0));
    for (const auto& p : rows) {
        CHECK(p.lambda == doctest::Approx(lambda_of_t(p.t, 3, 0.4)).epsilon(1e-13));
        CHECK((p.t >= 1.0 ? p.a >= p.c : p.a <= p.c));  // a = t^k c
        CHECK(p.a > 0.0);
        CHECK(p.c > 0.0);
    }

    auto csv = parse_csv(curve_to_csv(rows));
    REQUIRE(csv.size() == rows.size() + 1);
    CHECK(csv[0] == std::vector<std::string>{"t", "lambda", "a", "c"});
    nlohmann::json j = curve_to_json(3, 0.4, rows);
    REQUIRE(j["rows"].size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(std::stod(csv[i + 1][0]) == rows[i].t);
        CHECK(std::stod(csv[i + 1][1]) == rows[i].lambda);
        CHECK(j["rows"][i]["t"].get<double>() == rows[i].t);
        CHECK(j["rows"][i]["lambda"].get<double>() == rows[i].lambda);
    }
}

TEST_CASE("mode names") {
    CHECK(mode_name(ScanMode::TiQ4) == "ti-q4");
    CHECK(mode_name(ScanMode::BipQ2) == "bip-q2");
    CHECK(mode_name(ScanMode::BipQ4I4) == "bip-q4-I4");
}
