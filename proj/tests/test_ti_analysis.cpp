#include <cmath>

#include <doctest.h>

#include "hcwand/maps.hpp"
#include "hcwand/ti_analysis.hpp"

using namespace hcwand;

TEST_CASE("ti q=2 solution") {
    CHECK(solve_ti_q2(2, 2.0) == doctest::Approx(2.0).epsilon(1e-12));

    SUBCASE("k=3, lambda=8: residual of the polynomial form") {
        double a = solve_ti_q2(3, 8.0);
        CHECK(std::abs(8.0 * ipow(a, 4) - 8.0 * ipow(a + 2.0, 3)) /
                  (8.0 * ipow(a + 2.0, 3)) < 1e-12);
    }
    SUBCASE("a* decreases monotonically as lambda drops to 0") {
        double prev = solve_ti_q2(2, 1e-1);
        for (double lam : {1e-2, 1e-3, 1e-4}) {
            double a = solve_ti_q2(2, lam);
            CHECK(a < prev);
            prev = a;
        }
        CHECK(prev < 0.1);
    }
}

TEST_CASE("closed-form lambda_cr1") {
    CHECK(lambda_cr1(2, 1.0) == doctest::Approx(2.0));
    CHECK(lambda_cr1(3, 0.4) == doctest::Approx(11.2 / 54.0).epsilon(1e-14));
    CHECK(lambda_cr1(4, 1.0) == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("ti q=4 diagonal") {
    CHECK(solve_ti_q4_diagonal(2, 4.0 / 9.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("residual against the defining equation") {
        double a = solve_ti_q4_diagonal(2, 2.0, 1.0);
        CHECK(std::abs(a - 2.0 * ipow((1 + 1 + a) / (2 * a), 2)) < 1e-12);
    }
    SUBCASE("fixed point grows with lambda") {
        double a1 = solve_ti_q4_diagonal(3, 1.0, 0.5);
        double a2 = solve_ti_q4_diagonal(3, 10.0, 0.5);
        double a3 = solve_ti_q4_diagonal(3, 100.0, 0.5);
        CHECK(a1 < a2);
        CHECK(a2 < a3);
    }
}

TEST_CASE("lambda(t) curve") {
    CHECK(lambda_of_t(1.0, 3, 0.4) == doctest::Approx(11.2 / 54.0).epsilon(1e-14));
    CHECK(lambda_of_t(2.0, 2, 1.0) == doctest::Approx(50.0 / 18.0).epsilon(1e-14));

    SUBCASE("lambda(1) equals the closed form") {
        for (int k = 2; k <= 8; ++k)
            for (double l2 : {0.1, 0.4, 1.0, 1.6, 10.0})
                CHECK(lambda_of_t(1.0, k, l2) ==
                      doctest::Approx(lambda_cr1(k, l2)).epsilon(1e-14));
    }
    SUBCASE("t <-> 1/t symmetry on a log grid") {
        for (int i = 0; i <= 60; ++i) {
            double t = std::pow(10.0, -3.0 + 6.0 * i / 60.0);
            double l1 = lambda_of_t(t, 3, 0.4);
            double l2 = lambda_of_t(1.0 / t, 3, 0.4);
            CHECK(std::abs(l1 - l2) <= 1e-12 * std::max(l1, l2));
        }
    }
    SUBCASE("strictly increasing for t > 1") {
        double prev = lambda_of_t(1.0, 4, 1.0);
        for (double t = 1.05; t < 5.0; t += 0.05) {
            double l = lambda_of_t(t, 4, 1.0);
            CHECK(l > prev);
            prev = l;
        }
    }
    SUBCASE("analytic curve derivative matches finite differences away from t=1") {
        for (double t : {0.3, 0.7, 1.5, 3.0, 8.0}) {
            double h = 1e-6 * t;
            double fd = (lambda_of_t(t + h, 3, 0.4) - lambda_of_t(t - h, 3, 0.4)) / (2 * h);
            CHECK(lambda_curve_derivative(t, 3, 0.4) == doctest::Approx(fd).epsilon(1e-5));
        }
    }
    SUBCASE("minimum sits at t=1") {
        CHECK(std::abs(locate_curve_minimum(3, 0.4) - 1.0) < 1e-10);
        CHECK(std::abs(locate_curve_minimum(5, 1.6) - 1.0) < 1e-10);
    }
}

TEST_CASE("curve inversion") {
    int k = 2;
    double l2 = 1.0;
    double cr = lambda_cr1(k, l2);

    auto t = invert_lambda_curve(1.5 * cr, k, l2);
    REQUIRE(t.has_value());
    CHECK(*t > 1.0);
    CHECK(std::abs(lambda_of_t(*t, k, l2) - 1.5 * cr) < 1e-10);

    CHECK_FALSE(invert_lambda_curve(lambda_cr1(3, 0.4), 3, 0.4).has_value());
    CHECK_FALSE(invert_lambda_curve(0.5 * cr, k, l2).has_value());
}

TEST_CASE("ti q=4 enumeration") {
    int k = 2;
    double l2 = 1.0;  // lambda_cr1 = 2

    CHECK(enumerate_ti_q4(k, 1.0, l2).solutions.size() == 1);
    CHECK(enumerate_ti_q4(k, 2.0, l2).solutions.size() == 1);  // boundary is unique

    auto set = enumerate_ti_q4(k, 3.0, l2);
    REQUIRE(set.solutions.size() == 3);
    CHECK(set.regime == Regime::Triple);
    for (const auto& s : set.solutions) CHECK(s.residual < 1e-10);

    SUBCASE("off-diagonal pair is canonical and swapped") {
        CHECK(set.solutions[1].first > set.solutions[1].second);
        CHECK(set.solutions[1].first == doctest::Approx(set.solutions[2].second));
        CHECK(set.solutions[1].second == doctest::Approx(set.solutions[2].first));
    }
    SUBCASE("pair merges into the diagonal as lambda drops to critical") {
        double cr = lambda_cr1(k, l2);
        double prev_gap = 1e30;
        for (int j = 1; j <= 6; ++j) {
            auto s = enumerate_ti_q4(k, cr * (1.0 + std::pow(10.0, -j)), l2);
            REQUIRE(s.solutions.size() == 3);
            double gap = s.solutions[1].first - s.solutions[1].second;
            CHECK(gap > 0.0);
            CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        CHECK(prev_gap < 0.05);
    }
}

TEST_CASE("assembled period descriptors") {
    auto v2 = assemble_ti_vector_q2(2.0);
    CHECK(v2.values == std::vector<double>{1.0, 2.0});
    CHECK_FALSE(v2.normalisable());

    auto v4 = assemble_ti_vector_q4(3.0, 0.5, 1.0);
    CHECK(v4.values == std::vector<double>{1.0, 3.0, 1.0, 0.5});

    auto diag = assemble_ti_vector_q4(2.5, 2.5, 0.4);
    CHECK(diag.values == std::vector<double>{1.0, 2.5, 0.4, 2.5});
}
